#include "wdq/term.hpp"

#include <cctype>

namespace wdq {

namespace {

bool bareWordSafe(const std::string& s) {
    if (s.empty()) return false;
    auto head = s.front();
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-'))
            return false;
    }
    if (s.rfind("_:", 0) == 0) return false;  // would lex as a blank node
    std::string upper;
    for (char c : s) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const char* kw : {"OPTIONAL", "FILTER", "UNION", "SELECT", "WHERE", "BOUND"})
        if (upper == kw) return false;
    return true;
}

std::string escapeLiteral(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string toString(const Term& t) {
    switch (t.kind) {
        case TermKind::Var: return "?" + t.text;
        case TermKind::Iri: return bareWordSafe(t.text) ? t.text : "<" + t.text + ">";
        case TermKind::Literal: return "\"" + escapeLiteral(t.text) + "\"";
        case TermKind::Blank: return "_:" + t.text;
    }
    return {};
}

std::string toString(const TriplePattern& tp) {
    return toString(tp.subject) + " " + toString(tp.predicate) + " " + toString(tp.object);
}

}  // namespace wdq
