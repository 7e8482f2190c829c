#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdq {

/// Byte range into the source text, for error reporting.
struct SourceSpan {
    std::size_t start{0};
    std::size_t end{0};
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, SourceSpan span)
        : std::runtime_error(std::move(message)), span_(span) {}
    SourceSpan span() const { return span_; }

  private:
    SourceSpan span_;
};

class NotInOptNormalForm : public std::runtime_error {
  public:
    explicit NotInOptNormalForm(const std::string& message) : std::runtime_error(message) {}
};

class NotWellDesigned : public std::runtime_error {
  public:
    explicit NotWellDesigned(const std::string& message) : std::runtime_error(message) {}
};

class UnsupportedNode : public std::runtime_error {
  public:
    explicit UnsupportedNode(const std::string& message) : std::runtime_error(message) {}
};

class ShapeInfeasible : public std::runtime_error {
  public:
    explicit ShapeInfeasible(const std::string& message) : std::runtime_error(message) {}
};

class ResourceLimit : public std::runtime_error {
  public:
    explicit ResourceLimit(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace wdq
