#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "occ/term.hpp"

namespace occ {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

/// Recursive-descent parser for the term and object text syntax:
///   objects:   atoms I A C, infix '*', parentheses
///   terms:     generators mu[A] eta[A] delta[A] epsilon[A] alpha[x,y,z]
///              lambda[x] rho[x] sigma[x,y] ('~' suffix for inverses),
///              id[x], infix '*' (tensor) and ';' (then; f ; g means g∘f).
/// '*' binds tighter than ';'; both associate to the left.
class TermParser {
public:
    explicit TermParser(std::string_view src) : src_(src) {}

    ObjectExpr parse_object() {
        ObjectExpr o = object_expr();
        expect_end();
        return o;
    }

    MorphismTerm parse_term() {
        MorphismTerm t = term_expr();
        expect_end();
        return t;
    }

    /// "lhs = rhs"
    std::pair<MorphismTerm, MorphismTerm> parse_equation() {
        MorphismTerm lhs = term_expr();
        skip_ws();
        if (!eat('=')) fail("expected '='");
        MorphismTerm rhs = term_expr();
        expect_end();
        return {lhs, rhs};
    }

private:
    ObjectExpr object_expr() {
        ObjectExpr o = object_factor();
        skip_ws();
        while (eat('*')) {
            o = tensor(o, object_factor());
            skip_ws();
        }
        return o;
    }

    ObjectExpr object_factor() {
        skip_ws();
        if (eat('(')) {
            ObjectExpr o = object_expr();
            if (!eat(')')) fail("expected ')'");
            return o;
        }
        char c = peek();
        switch (c) {
            case 'I': ++pos_; return obj_I();
            case 'A': ++pos_; return obj_A();
            case 'C': ++pos_; return obj_C();
            default: fail("expected object atom I, A or C");
        }
        return obj_I();
    }

    MorphismTerm term_expr() {
        MorphismTerm t = par_expr();
        skip_ws();
        while (eat(';')) {
            MorphismTerm next = par_expr();
            t = MorphismTerm::seq(next, t); // f ; g is g after f
            skip_ws();
        }
        return t;
    }

    MorphismTerm par_expr() {
        MorphismTerm t = term_factor();
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            t = MorphismTerm::par(t, term_factor());
            skip_ws();
        }
        return t;
    }

    MorphismTerm term_factor() {
        skip_ws();
        if (eat('(')) {
            MorphismTerm t = term_expr();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        std::string name = ident();
        if (name.empty()) fail("expected generator or 'id'");
        if (!eat('[')) fail("expected '[' after '" + name + "'");
        if (name == "id") {
            ObjectExpr x = object_expr();
            close_bracket();
            return MorphismTerm::id(x);
        }
        if (name == "mu" || name == "eta" || name == "delta" || name == "epsilon") {
            Atom o = frob_atom();
            close_bracket();
            GenKind k = name == "mu"      ? GenKind::Mu
                        : name == "eta"   ? GenKind::Eta
                        : name == "delta" ? GenKind::Delta
                                          : GenKind::Epsilon;
            return MorphismTerm::gen(Generator::frobenius(k, o));
        }
        std::vector<ObjectExpr> params;
        params.push_back(object_expr());
        skip_ws();
        while (eat(',')) params.push_back(object_expr());
        close_bracket();
        bool inv = eat('~');
        GenKind k;
        if (name == "alpha")
            k = inv ? GenKind::AlphaInv : GenKind::Alpha;
        else if (name == "lambda")
            k = inv ? GenKind::LambdaInv : GenKind::Lambda;
        else if (name == "rho")
            k = inv ? GenKind::RhoInv : GenKind::Rho;
        else if (name == "sigma")
            k = inv ? GenKind::SigmaInv : GenKind::Sigma;
        else
            fail("unknown generator '" + name + "'");
        return MorphismTerm::gen(Generator::structural(k, std::move(params)));
    }

    Atom frob_atom() {
        skip_ws();
        char c = peek();
        if (c == 'A') {
            ++pos_;
            return Atom::A;
        }
        if (c == 'C') {
            ++pos_;
            return Atom::C;
        }
        fail("Frobenius generator atom must be A or C");
        return Atom::A;
    }

    void close_bracket() {
        skip_ws();
        if (!eat(']')) fail("expected ']'");
    }

    std::string ident() {
        skip_ws();
        std::string s;
        while (pos_ < src_.size() &&
               (std::islower((unsigned char)src_[pos_]) || src_[pos_] == '_'))
            s += src_[pos_++];
        return s;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
    }
    void expect_end() {
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline ObjectExpr parse_object(std::string_view s) { return TermParser(s).parse_object(); }
inline MorphismTerm parse_term(std::string_view s) { return TermParser(s).parse_term(); }
inline std::pair<MorphismTerm, MorphismTerm> parse_equation(std::string_view s) {
    return TermParser(s).parse_equation();
}

} // namespace occ
