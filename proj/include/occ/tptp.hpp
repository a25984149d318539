#pragma once

#include <cctype>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace occ::tptp {

/// A THF type: an atomic name, or a right-associated arrow chain A > B > C.
struct Type {
    std::string atom;        // set when chain is empty
    std::vector<Type> chain; // arrow components when size >= 2

    static Type named(std::string n) { return {std::move(n), {}}; }
    static Type arrow(std::vector<Type> parts) {
        if (parts.size() < 2) throw std::invalid_argument("arrow needs >= 2 parts");
        return {"", std::move(parts)};
    }
    bool is_arrow() const { return !chain.empty(); }

    friend bool operator==(const Type& a, const Type& b) {
        return a.atom == b.atom && a.chain == b.chain;
    }

    std::string str() const {
        if (!is_arrow()) return atom;
        std::string s;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) s += " > ";
            if (chain[i].is_arrow()) s += "(" + chain[i].str() + ")";
            else s += chain[i].str();
        }
        return s;
    }
};

/// A THF expression: constant, bound variable, application, or equality.
struct Expr {
    enum class Kind { Const, Var, App, Eq };
    Kind kind = Kind::Const;
    std::string name;        // Const/Var
    std::vector<Expr> parts; // App: head then operands; Eq: lhs, rhs

    static Expr constant(std::string n) { return {Kind::Const, std::move(n), {}}; }
    static Expr var(std::string n) { return {Kind::Var, std::move(n), {}}; }
    static Expr app(Expr head, std::vector<Expr> operands) {
        Expr e{Kind::App, "", {}};
        e.parts.push_back(std::move(head));
        for (Expr& o : operands) e.parts.push_back(std::move(o));
        return e;
    }
    static Expr eq(Expr l, Expr r) {
        Expr e{Kind::Eq, "", {}};
        e.parts.push_back(std::move(l));
        e.parts.push_back(std::move(r));
        return e;
    }

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.kind == b.kind && a.name == b.name && a.parts == b.parts;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Const:
            case Kind::Var: return name;
            case Kind::App: {
                std::string s = "(" + parts[0].str();
                for (std::size_t i = 1; i < parts.size(); ++i)
                    s += " @ " + parts[i].str();
                return s + ")";
            }
            case Kind::Eq:
                return "( " + parts[0].str() + " = " + parts[1].str() + " )";
        }
        return "";
    }
};

enum class Role { Type, Axiom, Conjecture };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::Type: return "type";
        case Role::Axiom: return "axiom";
        case Role::Conjecture: return "conjecture";
    }
    return "?";
}

/// One annotated formula: a type declaration `const: type`, or a
/// (possibly quantified) axiom or conjecture body.
struct Formula {
    std::string name;
    Role role = Role::Axiom;
    // Role::Type
    std::string const_name;
    Type const_type;
    // Role::Axiom / Role::Conjecture
    std::vector<std::pair<std::string, Type>> vars; // ! [X: t, ...]
    Expr body;

    static Formula type_decl(std::string name, std::string c, Type t) {
        Formula f;
        f.name = std::move(name);
        f.role = Role::Type;
        f.const_name = std::move(c);
        f.const_type = std::move(t);
        return f;
    }
    static Formula statement(std::string name, Role role,
                             std::vector<std::pair<std::string, Type>> vars,
                             Expr body) {
        Formula f;
        f.name = std::move(name);
        f.role = role;
        f.vars = std::move(vars);
        f.body = std::move(body);
        return f;
    }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.name == b.name && a.role == b.role &&
               a.const_name == b.const_name && a.const_type == b.const_type &&
               a.vars == b.vars && a.body == b.body;
    }
};

/// An ordered THF problem. Names unique; constants declared before use.
struct Problem {
    std::vector<Formula> formulas;

    friend bool operator==(const Problem& a, const Problem& b) {
        return a.formulas == b.formulas;
    }

    /// Throws std::invalid_argument on duplicate names or use of an
    /// undeclared constant.
    void validate() const {
        std::set<std::string> names, consts;
        for (const Formula& f : formulas) {
            if (!names.insert(f.name).second)
                throw std::invalid_argument("duplicate formula name '" + f.name + "'");
            if (f.role == Role::Type) {
                consts.insert(f.const_name);
                continue;
            }
            check_consts(f.body, consts);
        }
    }

private:
    static void check_consts(const Expr& e, const std::set<std::string>& consts) {
        if (e.kind == Expr::Kind::Const && !consts.count(e.name))
            throw std::invalid_argument("constant '" + e.name +
                                        "' used before declaration");
        for (const Expr& p : e.parts) check_consts(p, consts);
    }
};

/// Canonical emission: one `thf(name,role,(...)).` record per formula.
inline std::string emit(const Problem& p) {
    std::string out;
    for (const Formula& f : p.formulas) {
        out += "thf(" + f.name + "," + role_name(f.role) + ",(";
        if (f.role == Role::Type) {
            out += f.const_name + ": " + f.const_type.str();
        } else {
            if (!f.vars.empty()) {
                out += "! [";
                for (std::size_t i = 0; i < f.vars.size(); ++i) {
                    if (i) out += ", ";
                    out += f.vars[i].first + ": " + f.vars[i].second.str();
                }
                out += "]: ";
            }
            out += f.body.str();
        }
        out += ")).\n";
    }
    return out;
}

struct ParseError : std::runtime_error {
    std::size_t line, column;
    ParseError(const std::string& msg, std::size_t l, std::size_t c)
        : std::runtime_error("line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

namespace detail {

struct Token {
    enum class Kind { Name, LPar, RPar, Comma, Colon, Bang, LBrk, RBrk, At, Eq, Gt, Dot, End };
    Kind kind;
    std::string text;
    std::size_t line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (std::isspace((unsigned char)c)) { ++col_; ++pos_; continue; }
            if (c == '%') { // comment to end of line
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        std::size_t l = line_, c0 = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End, "", l, c0};
            return;
        }
        char c = s_[pos_];
        auto one = [&](Token::Kind k) {
            tok_ = {k, std::string(1, c), l, c0};
            ++pos_; ++col_;
        };
        switch (c) {
            case '(': one(Token::Kind::LPar); return;
            case ')': one(Token::Kind::RPar); return;
            case ',': one(Token::Kind::Comma); return;
            case ':': one(Token::Kind::Colon); return;
            case '!': one(Token::Kind::Bang); return;
            case '[': one(Token::Kind::LBrk); return;
            case ']': one(Token::Kind::RBrk); return;
            case '@': one(Token::Kind::At); return;
            case '=': one(Token::Kind::Eq); return;
            case '>': one(Token::Kind::Gt); return;
            case '.': one(Token::Kind::Dot); return;
            default: break;
        }
        if (std::isalnum((unsigned char)c) || c == '$' || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '$' ||
                    s_[pos_] == '_' || s_[pos_] == '-'))
                { name += s_[pos_++]; ++col_; }
            tok_ = {Token::Kind::Name, std::move(name), l, c0};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, c0);
    }

    const std::string& s_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    Problem parse_problem() {
        Problem p;
        while (lex_.peek().kind != Token::Kind::End) p.formulas.push_back(parse_formula());
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = lex_.peek();
        throw ParseError(msg + " (got '" + (t.kind == Token::Kind::End ? "<end>" : t.text) + "')",
                         t.line, t.column);
    }
    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail("expected " + what);
        return lex_.take();
    }

    Formula parse_formula() {
        Token head = expect(Token::Kind::Name, "'thf'");
        if (head.text != "thf") throw ParseError("expected 'thf'", head.line, head.column);
        expect(Token::Kind::LPar, "'('");
        std::string name = expect(Token::Kind::Name, "formula name").text;
        expect(Token::Kind::Comma, "','");
        std::string role = expect(Token::Kind::Name, "role").text;
        expect(Token::Kind::Comma, "','");
        expect(Token::Kind::LPar, "'('");
        Formula f;
        f.name = std::move(name);
        if (role == "type") {
            f.role = Role::Type;
            f.const_name = expect(Token::Kind::Name, "constant name").text;
            expect(Token::Kind::Colon, "':'");
            f.const_type = parse_type();
        } else if (role == "axiom" || role == "conjecture") {
            f.role = role == "axiom" ? Role::Axiom : Role::Conjecture;
            if (lex_.peek().kind == Token::Kind::Bang) {
                lex_.take();
                expect(Token::Kind::LBrk, "'['");
                while (true) {
                    std::string v = expect(Token::Kind::Name, "variable").text;
                    expect(Token::Kind::Colon, "':'");
                    f.vars.push_back({std::move(v), parse_type()});
                    if (lex_.peek().kind == Token::Kind::Comma) { lex_.take(); continue; }
                    break;
                }
                expect(Token::Kind::RBrk, "']'");
                expect(Token::Kind::Colon, "':'");
            }
            f.body = parse_expr(f.vars);
        } else {
            throw ParseError("unknown role '" + role + "'", head.line, head.column);
        }
        expect(Token::Kind::RPar, "')'");
        expect(Token::Kind::RPar, "')'");
        expect(Token::Kind::Dot, "'.'");
        return f;
    }

    Type parse_type() {
        std::vector<Type> parts;
        parts.push_back(parse_type_atom());
        while (lex_.peek().kind == Token::Kind::Gt) {
            lex_.take();
            parts.push_back(parse_type_atom());
        }
        if (parts.size() == 1) return parts[0];
        return Type::arrow(std::move(parts));
    }
    Type parse_type_atom() {
        if (lex_.peek().kind == Token::Kind::LPar) {
            lex_.take();
            Type t = parse_type();
            expect(Token::Kind::RPar, "')'");
            return t;
        }
        return Type::named(expect(Token::Kind::Name, "type name").text);
    }

    Expr parse_expr(const std::vector<std::pair<std::string, Type>>& vars) {
        Expr l = parse_operand(vars);
        if (lex_.peek().kind == Token::Kind::Eq) {
            lex_.take();
            Expr r = parse_operand(vars);
            return Expr::eq(std::move(l), std::move(r));
        }
        return l;
    }

    Expr parse_operand(const std::vector<std::pair<std::string, Type>>& vars) {
        if (lex_.peek().kind == Token::Kind::LPar) {
            lex_.take();
            Expr head = parse_expr(vars);
            if (lex_.peek().kind == Token::Kind::At) {
                std::vector<Expr> operands;
                while (lex_.peek().kind == Token::Kind::At) {
                    lex_.take();
                    operands.push_back(parse_operand(vars));
                }
                head = Expr::app(std::move(head), std::move(operands));
            }
            expect(Token::Kind::RPar, "')'");
            return head;
        }
        Token t = expect(Token::Kind::Name, "expression");
        for (const auto& [v, ty] : vars)
            if (v == t.text) return Expr::var(t.text);
        return Expr::constant(t.text);
    }

    Lexer lex_;
};

} // namespace detail

/// Parses the emitted THF subset; throws ParseError with line/column.
inline Problem parse(const std::string& text) {
    return detail::Parser(text).parse_problem();
}

enum class SzsStatus { Theorem, CounterSatisfiable, Timeout, Unknown, GaveUp };

inline const char* szs_status_name(SzsStatus s) {
    switch (s) {
        case SzsStatus::Theorem: return "Theorem";
        case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
        case SzsStatus::Timeout: return "Timeout";
        case SzsStatus::Unknown: return "Unknown";
        case SzsStatus::GaveUp: return "GaveUp";
    }
    return "?";
}

struct SzsResult {
    std::string tag;    // problem tag (last path component)
    std::string prover; // empty for bare SZS status lines
    SzsStatus status = SzsStatus::Unknown;
    std::string raw_status; // status word as it appeared
    double cpu = 0.0, wc = 0.0;
};

namespace detail {

inline SzsStatus status_from(const std::string& w) {
    if (w == "Theorem") return SzsStatus::Theorem;
    if (w == "CounterSatisfiable") return SzsStatus::CounterSatisfiable;
    if (w == "Timeout") return SzsStatus::Timeout;
    if (w == "GaveUp") return SzsStatus::GaveUp;
    return SzsStatus::Unknown;
}

inline std::string strip(std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

inline std::string basename(std::string path) {
    if (!path.empty() && path.back() == ':') path.pop_back();
    path = strip(path);
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

} // namespace detail

/// Extracts `% RESULT: tag - prover says Status - CPU = x WC = y` and
/// `% SZS status Status for path` lines; the leading `%` is optional;
/// everything else is ignored.
inline std::vector<SzsResult> parse_szs(const std::string& text) {
    std::vector<SzsResult> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::strip(line);
        if (!s.empty() && s[0] == '%') s = detail::strip(s.substr(1));
        if (s.rfind("RESULT:", 0) == 0) {
            // RESULT: <tag> - <prover> says <status> - CPU = <f> WC = <f>
            std::istringstream ls(s.substr(7));
            SzsResult r;
            std::string dash, says, dash2, cpu_kw, eq1, wc_kw, eq2;
            if (ls >> r.tag >> dash >> r.prover >> says >> r.raw_status >>
                    dash2 >> cpu_kw >> eq1 >> r.cpu >> wc_kw >> eq2 >> r.wc &&
                dash == "-" && says == "says" && dash2 == "-" &&
                cpu_kw == "CPU" && eq1 == "=" && wc_kw == "WC" && eq2 == "=" &&
                r.cpu >= 0 && r.wc >= 0) {
                r.status = detail::status_from(r.raw_status);
                out.push_back(std::move(r));
            }
        } else if (s.rfind("SZS status", 0) == 0) {
            std::istringstream ls(s.substr(10));
            SzsResult r;
            std::string for_kw, path;
            if (ls >> r.raw_status >> for_kw >> path && for_kw == "for") {
                r.status = detail::status_from(r.raw_status);
                r.tag = detail::basename(path);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

} // namespace occ::tptp
