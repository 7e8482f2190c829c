#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "wdq/errors.hpp"
#include "wdq/surface.hpp"

namespace wdq {
namespace {

enum class Tok {
    LBrace, RBrace, LParen, RParen, Dot,
    Eq, Neq, AndAnd, OrOr, Bang,
    Var, IriRef, BareWord, Literal,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool iequals(const std::string& a, const char* b) {
    const char* p = b;
    for (char c : a) {
        if (*p == '\0' || std::toupper(static_cast<unsigned char>(c)) != *p) return false;
        ++p;
    }
    return *p == '\0';
}

bool isKeyword(const Token& t, const char* kw) {
    return t.kind == Tok::BareWord && iequals(t.text, kw);
}

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skipWs();
            std::size_t start = pos_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", {start, start}});
                break;
            }
            char c = text_[pos_];
            if (c == '{') { out.push_back(single(Tok::LBrace)); continue; }
            if (c == '}') { out.push_back(single(Tok::RBrace)); continue; }
            if (c == '(') { out.push_back(single(Tok::LParen)); continue; }
            if (c == ')') { out.push_back(single(Tok::RParen)); continue; }
            if (c == '.') { out.push_back(single(Tok::Dot)); continue; }
            if (c == '=') { out.push_back(single(Tok::Eq)); continue; }
            if (c == '!') {
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                    pos_ += 2;
                    out.push_back({Tok::Neq, "!=", {start, pos_}});
                } else {
                    out.push_back(single(Tok::Bang));
                }
                continue;
            }
            if (c == '&' || c == '|') {
                if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != c)
                    throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
                pos_ += 2;
                out.push_back({c == '&' ? Tok::AndAnd : Tok::OrOr, {c, c}, {start, pos_}});
                continue;
            }
            if (c == '?') {
                ++pos_;
                std::string name = word();
                if (name.empty()) throw ParseError("empty variable name after '?'", {start, pos_});
                out.push_back({Tok::Var, name, {start, pos_}});
                continue;
            }
            if (c == '<') {
                ++pos_;
                std::string iri;
                while (pos_ < text_.size() && text_[pos_] != '>') iri += text_[pos_++];
                if (pos_ >= text_.size()) throw ParseError("unterminated IRI", {start, pos_});
                ++pos_;
                out.push_back({Tok::IriRef, iri, {start, pos_}});
                continue;
            }
            if (c == '"') {
                ++pos_;
                std::string lit;
                while (pos_ < text_.size() && text_[pos_] != '"') {
                    char d = text_[pos_++];
                    if (d == '\\' && pos_ < text_.size()) {
                        char e = text_[pos_++];
                        switch (e) {
                            case 'n': lit += '\n'; break;
                            case 't': lit += '\t'; break;
                            default: lit += e;
                        }
                    } else {
                        lit += d;
                    }
                }
                if (pos_ >= text_.size()) throw ParseError("unterminated literal", {start, pos_});
                ++pos_;
                out.push_back({Tok::Literal, lit, {start, pos_}});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string w = word();
                out.push_back({Tok::BareWord, w, {start, pos_}});
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
        }
        return out;
    }

  private:
    Token single(Tok kind) {
        std::size_t start = pos_++;
        return {kind, std::string(1, text_[start]), {start, pos_}};
    }

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string word() {
        std::string w;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-') {
                w += c;
                ++pos_;
            } else {
                break;
            }
        }
        return w;
    }

    std::string_view text_;
    std::size_t pos_{0};
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    PatternPtr parseQuery() {
        PatternPtr p = isKeyword(peek(), "SELECT") ? parseSelect() : parseUnionExpr();
        expect(Tok::End, "end of input");
        return p;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }

    Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                             peek().span);
        return next();
    }

    PatternPtr parseSelect() {
        next();  // SELECT
        std::set<std::string> vars;
        while (peek().kind == Tok::Var) vars.insert(next().text);
        if (vars.empty())
            throw ParseError("SELECT requires at least one variable", peek().span);
        if (!isKeyword(peek(), "WHERE"))
            throw ParseError("expected WHERE after SELECT variables", peek().span);
        next();
        return Pattern::select(std::move(vars), parseUnionExpr());
    }

    PatternPtr parseUnionExpr() {
        PatternPtr p = parseGroup();
        while (isKeyword(peek(), "UNION")) {
            next();
            p = Pattern::unionOf(p, parseGroup());
        }
        return p;
    }

    PatternPtr parseGroup() {
        Token open = expect(Tok::LBrace, "'{'");
        if (isKeyword(peek(), "SELECT")) {
            PatternPtr sel = parseSelect();
            expect(Tok::RBrace, "'}'");
            return sel;
        }
        PatternPtr acc;
        while (peek().kind != Tok::RBrace) {
            if (peek().kind == Tok::End)
                throw ParseError("unterminated group", open.span);
            if (peek().kind == Tok::Dot) {
                next();
                continue;
            }
            if (isKeyword(peek(), "OPTIONAL")) {
                Token kw = next();
                if (!acc)
                    throw ParseError("OPTIONAL without a preceding pattern", kw.span);
                acc = Pattern::opt(acc, parseGroup());
                continue;
            }
            if (isKeyword(peek(), "FILTER")) {
                Token kw = next();
                if (!acc)
                    throw ParseError("FILTER without a preceding pattern", kw.span);
                expect(Tok::LParen, "'(' after FILTER");
                ConstraintPtr c = parseOrConstraint();
                expect(Tok::RParen, "')'");
                acc = Pattern::filter(acc, c);
                continue;
            }
            PatternPtr elem;
            if (peek().kind == Tok::LBrace) {
                elem = parseUnionExpr();
            } else {
                elem = parseTriple();
            }
            acc = acc ? Pattern::andOf(acc, elem) : elem;
        }
        Token close = next();
        if (!acc) throw ParseError("empty group", {open.span.start, close.span.end});
        return acc;
    }

    PatternPtr parseTriple() {
        Token first = peek();
        Term s = parseTerm();
        Term p = parseTerm();
        Term o = parseTerm();
        if (p.kind == TermKind::Literal)
            throw ParseError("literal is not allowed in predicate position", first.span);
        return Pattern::triple(std::move(s), std::move(p), std::move(o));
    }

    Term parseTerm() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Var:
                return Term::var(next().text);
            case Tok::IriRef:
                return Term::iri(next().text);
            case Tok::Literal:
                return Term::literal(next().text);
            case Tok::BareWord:
                if (t.text.rfind("_:", 0) == 0)
                    throw ParseError("blank nodes are not allowed in patterns", t.span);
                for (const char* kw : {"OPTIONAL", "FILTER", "UNION", "SELECT", "WHERE", "BOUND"})
                    if (iequals(t.text, kw))
                        throw ParseError("keyword '" + t.text + "' in term position", t.span);
                return Term::iri(next().text);
            default:
                throw ParseError("expected a term, got '" + t.text + "'", t.span);
        }
    }

    ConstraintPtr parseOrConstraint() {
        ConstraintPtr c = parseAndConstraint();
        while (peek().kind == Tok::OrOr) {
            next();
            c = Constraint::disjunction(c, parseAndConstraint());
        }
        return c;
    }

    ConstraintPtr parseAndConstraint() {
        ConstraintPtr c = parseUnaryConstraint();
        while (peek().kind == Tok::AndAnd) {
            next();
            c = Constraint::conjunction(c, parseUnaryConstraint());
        }
        return c;
    }

    ConstraintPtr parseUnaryConstraint() {
        if (peek().kind == Tok::Bang) {
            next();
            return Constraint::negation(parseUnaryConstraint());
        }
        if (peek().kind == Tok::LParen) {
            next();
            ConstraintPtr c = parseOrConstraint();
            expect(Tok::RParen, "')'");
            return c;
        }
        return parseAtomConstraint();
    }

    ConstraintPtr parseAtomConstraint() {
        if (isKeyword(peek(), "BOUND")) {
            next();
            expect(Tok::LParen, "'(' after BOUND");
            Token v = expect(Tok::Var, "variable in BOUND(...)");
            expect(Tok::RParen, "')'");
            return Constraint::bound(Term::var(v.text));
        }
        Token first = peek();
        Term lhs = parseTerm();
        bool negated = false;
        if (peek().kind == Tok::Neq)
            negated = true;
        else if (peek().kind != Tok::Eq)
            throw ParseError("expected '=' or '!=' in constraint", peek().span);
        next();
        Term rhs = parseTerm();

        ConstraintPtr atom;
        if (lhs.isVar() && rhs.isVar())
            atom = Constraint::eqVarVar(lhs, rhs);
        else if (lhs.isVar())
            atom = Constraint::eqVarTerm(lhs, rhs);
        else if (rhs.isVar())
            atom = Constraint::eqVarTerm(rhs, lhs);
        else
            throw ParseError("equality constraint needs at least one variable", first.span);
        return negated ? Constraint::negation(atom) : atom;
    }

    std::vector<Token> tokens_;
    std::size_t pos_{0};
};

}  // namespace

PatternPtr parsePattern(std::string_view text) {
    Parser parser(Lexer(text).run());
    return assignOptIds(parser.parseQuery());
}

}  // namespace wdq
