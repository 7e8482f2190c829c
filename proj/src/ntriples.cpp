#include <cctype>
#include <string>
#include <vector>

#include "wdq/errors.hpp"
#include "wdq/surface.hpp"

namespace wdq {
namespace {

struct LineScanner {
    std::string_view line;
    std::size_t pos{0};
    std::size_t lineNo;
    std::size_t lineStart;  // byte offset of the line in the whole input

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(lineNo) + ": " + what,
                         {lineStart + pos, lineStart + line.size()});
    }

    void skipWs() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }

    bool atEnd() {
        skipWs();
        return pos >= line.size();
    }

    Term term() {
        skipWs();
        if (pos >= line.size()) fail("expected a term");
        char c = line[pos];
        if (c == '<') {
            ++pos;
            std::string iri;
            while (pos < line.size() && line[pos] != '>') iri += line[pos++];
            if (pos >= line.size()) fail("unterminated IRI");
            ++pos;
            return Term::iri(iri);
        }
        if (c == '"') {
            ++pos;
            std::string lit;
            while (pos < line.size() && line[pos] != '"') {
                char d = line[pos++];
                if (d == '\\' && pos < line.size()) {
                    char e = line[pos++];
                    switch (e) {
                        case 'n': lit += '\n'; break;
                        case 't': lit += '\t'; break;
                        default: lit += e;
                    }
                } else {
                    lit += d;
                }
            }
            if (pos >= line.size()) fail("unterminated literal");
            ++pos;
            return Term::literal(lit);
        }
        if (c == '_' && pos + 1 < line.size() && line[pos + 1] == ':') {
            pos += 2;
            std::string label;
            while (pos < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
                label += line[pos++];
            if (label.empty()) fail("empty blank node label");
            return Term::blank(label);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

std::vector<TriplePattern> parseNTriples(std::string_view text) {
    std::vector<TriplePattern> triples;
    std::size_t lineNo = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view line =
            text.substr(offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
        ++lineNo;
        LineScanner sc{line, 0, lineNo, offset};
        if (!sc.atEnd() && line[sc.pos] != '#') {
            Term s = sc.term();
            Term p = sc.term();
            Term o = sc.term();
            sc.skipWs();
            if (sc.pos >= line.size() || line[sc.pos] != '.') sc.fail("expected terminating '.'");
            ++sc.pos;
            if (!sc.atEnd()) sc.fail("trailing content after '.'");
            if (s.kind == TermKind::Literal) sc.fail("literal is not allowed as subject");
            if (p.kind != TermKind::Iri) sc.fail("predicate must be an IRI");
            triples.push_back({std::move(s), std::move(p), std::move(o)});
        }
        if (eol == std::string_view::npos) break;
        offset = eol + 1;
    }
    return triples;
}

}  // namespace wdq
