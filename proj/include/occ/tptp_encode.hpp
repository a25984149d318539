#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occ/prove.hpp"
#include "occ/rewrite.hpp"
#include "occ/term.hpp"
#include "occ/tptp.hpp"

namespace occ::tptp {

/// Raised when a term's object expression falls outside the finite
/// type-name map of the target encoding.
struct Unencodable : std::runtime_error {
    std::string object;
    explicit Unencodable(const std::string& obj)
        : std::runtime_error("object '" + obj +
                             "' has no name in the encoding's type map"),
          object(obj) {}
};

namespace encode_detail {

inline bool uses_braiding(const MorphismTerm& t) {
    switch (t.tag()) {
        case MorphismTerm::Tag::Gen: {
            GenKind k = t.generator().kind;
            return k == GenKind::Sigma || k == GenKind::SigmaInv;
        }
        case MorphismTerm::Tag::Id: return false;
        default: return uses_braiding(t.left()) || uses_braiding(t.right());
    }
}

/// Flattens a Seq chain into factors, innermost (applied first) first.
inline void seq_factors(const MorphismTerm& t, std::vector<MorphismTerm>& out) {
    if (t.tag() == MorphismTerm::Tag::Seq) {
        seq_factors(t.before(), out);
        seq_factors(t.after(), out);
    } else {
        out.push_back(t);
    }
}

// --- single-atom Frobenius encoding ($a family) ---

/// Names the seven object shapes of the Frobenius encoding for a fixed
/// non-unit atom X: I, X, X*X, (X*X)*X, X*(X*X), I*X, X*I.
inline std::string frob_type_name(const ObjectExpr& o, Atom x) {
    ObjectExpr X(x), I = obj_I();
    if (o == I) return "$i";
    if (o == X) return "$a";
    if (o == tensor(X, X)) return "$aa";
    if (o == tensor(tensor(X, X), X)) return "$aaxa";
    if (o == tensor(X, tensor(X, X))) return "$axaa";
    if (o == tensor(I, X)) return "$ja";
    if (o == tensor(X, I)) return "$ai";
    throw Unencodable(o.str());
}

/// Maps one composition factor to its constant name, or nullopt for an
/// identity factor (absorbed into the chain).
inline std::optional<std::string> frob_constant(const MorphismTerm& f) {
    auto bare = [](const MorphismTerm& t) -> std::optional<std::string> {
        if (t.tag() != MorphismTerm::Tag::Gen) return std::nullopt;
        switch (t.generator().kind) {
            case GenKind::Mu: return "mu";
            case GenKind::Eta: return "eta";
            case GenKind::Delta: return "delta";
            case GenKind::Epsilon: return "epsilon";
            case GenKind::Alpha: return "alpha";
            case GenKind::AlphaInv: return "invalpha";
            case GenKind::Lambda: return "lamb";
            case GenKind::LambdaInv: return "invlamb";
            case GenKind::Rho: return "rho";
            case GenKind::RhoInv: return "invrho";
            default: return std::nullopt;
        }
    };
    switch (f.tag()) {
        case MorphismTerm::Tag::Id: return std::nullopt;
        case MorphismTerm::Tag::Gen: return bare(f);
        case MorphismTerm::Tag::Par: {
            const MorphismTerm l = f.left(), r = f.right();
            bool lid = l.tag() == MorphismTerm::Tag::Id;
            bool rid = r.tag() == MorphismTerm::Tag::Id;
            if (lid && rid) return std::nullopt;
            if (rid) {
                std::optional<std::string> g = bare(l);
                if (!g) break;
                if (*g == "mu") return "muid";
                if (*g == "delta") return "deltaid";
                if (*g == "eta") return "etaid";
                if (*g == "epsilon") return "epsilonid";
                break;
            }
            if (lid) {
                std::optional<std::string> g = bare(r);
                if (!g) break;
                if (*g == "mu") return "idmu";
                if (*g == "delta") return "iddelta";
                if (*g == "eta") return "ideta";
                if (*g == "epsilon") return "idepsilon";
                break;
            }
            break;
        }
        default: break;
    }
    throw Unencodable(f.str());
}

struct FrobChain {
    Expr expr;                    // chain applied to the bound variable
    std::vector<std::string> used; // constants, outermost last
};

inline FrobChain frob_chain(const MorphismTerm& t, Atom x, const Expr& base) {
    std::vector<MorphismTerm> factors;
    seq_factors(t, factors);
    FrobChain c{base, {}};
    bool any = false;
    for (const MorphismTerm& f : factors) {
        std::optional<std::string> name = frob_constant(f);
        if (!name) continue;
        c.expr = Expr::app(Expr::constant(*name), {c.expr});
        c.used.push_back(*name);
        any = true;
    }
    if (!any) {
        // all-identity side: use the explicit id constant on $a
        if (frob_type_name(typecheck(t).dom, x) != "$a")
            throw Unencodable(t.str());
        c.expr = Expr::app(Expr::constant("id"), {c.expr});
        c.used.push_back("id");
    }
    return c;
}

/// Declared signature of each Frobenius-family constant.
inline Type frob_sig(const std::string& name) {
    auto T = [](const char* n) { return Type::named(n); };
    auto A = [&](const char* d, const char* c) {
        return Type::arrow({T(d), T(c)});
    };
    static const std::map<std::string, Type> sigs = {
        {"mu", A("$aa", "$a")},          {"eta", A("$i", "$a")},
        {"delta", A("$a", "$aa")},       {"epsilon", A("$a", "$i")},
        {"alpha", A("$aaxa", "$axaa")},  {"invalpha", A("$axaa", "$aaxa")},
        {"lamb", A("$ja", "$a")},        {"rho", A("$ai", "$a")},
        {"invlamb", A("$a", "$ja")},     {"invrho", A("$a", "$ai")},
        {"muid", A("$aaxa", "$aa")},     {"idmu", A("$axaa", "$aa")},
        {"deltaid", A("$aa", "$aaxa")},  {"iddelta", A("$aa", "$axaa")},
        {"etaid", A("$ja", "$aa")},      {"ideta", A("$ai", "$aa")},
        {"epsilonid", A("$aa", "$ja")},  {"idepsilon", A("$aa", "$ai")},
        {"id", A("$a", "$a")},
    };
    return sigs.at(name);
}

inline std::string sanitize(const std::string& rule_name) {
    std::string s = rule_name;
    for (char& c : s)
        if (c == '.' || c == '-') c = '_';
    return s;
}

// --- braided encoding (c family) ---

struct BraidContext {
    std::size_t strands = 0;
    bool needs_alpha = false, needs_braid12 = false, needs_invbraid = false;
};

/// Object term over the strand variables X, Y, Z and its type name.
inline std::pair<Expr, std::string> braid_object(const ObjectExpr& o,
                                                 std::size_t strands) {
    std::vector<Atom> atoms = o.strict_atoms();
    if (atoms.size() != strands) throw Unencodable(o.str());
    auto V = [](std::size_t i) {
        static const char* names[] = {"X", "Y", "Z"};
        return Expr::var(names[i]);
    };
    if (strands == 2)
        return {Expr::app(Expr::constant("multo"), {V(0), V(1)}), "cc"};
    if (strands == 3) {
        ObjectExpr a = o;
        // only the two three-leaf bracketings exist
        if (!a.is_atom() && !a.left().is_atom()) // (x*y)*z
            return {Expr::app(Expr::constant("multo1"),
                              {Expr::app(Expr::constant("multo"), {V(0), V(1)}),
                               V(2)}),
                    "ccxc"};
        if (!a.is_atom() && !a.right().is_atom()) // x*(y*z)
            return {Expr::app(Expr::constant("multo2"),
                              {V(0),
                               Expr::app(Expr::constant("multo"), {V(1), V(2)})}),
                    "cxcc"};
    }
    throw Unencodable(o.str());
}

/// One factor as a unary function constant or a multm-style application.
inline Expr braid_factor(const MorphismTerm& f, BraidContext& ctx) {
    auto C = [](const char* n) { return Expr::constant(n); };
    if (f.tag() == MorphismTerm::Tag::Gen) {
        const Generator& g = f.generator();
        switch (g.kind) {
            case GenKind::Alpha: ctx.needs_alpha = true; return C("alpha");
            case GenKind::AlphaInv: ctx.needs_alpha = true; return C("invalpha");
            case GenKind::Sigma: {
                bool l1 = g.params[0].strict_atoms().size() == 1;
                bool r1 = g.params[1].strict_atoms().size() == 1;
                if (l1 && r1) return C("braid");
                ctx.needs_braid12 = true;
                if (l1 && !r1) return C("braid1"); // x braided past y*z
                if (!l1 && r1) return C("braid2"); // x*y braided past z
                break;
            }
            case GenKind::SigmaInv: {
                bool l1 = g.params[0].strict_atoms().size() == 1;
                bool r1 = g.params[1].strict_atoms().size() == 1;
                if (l1 && r1) { ctx.needs_invbraid = true; return C("invbraid"); }
                break;
            }
            default: break;
        }
        throw Unencodable(f.str());
    }
    if (f.tag() == MorphismTerm::Tag::Par) {
        const MorphismTerm l = f.left(), r = f.right();
        auto width = [](const MorphismTerm& t) {
            return typecheck(t).dom.strict_atoms().size();
        };
        auto part = [&](const MorphismTerm& t) -> Expr {
            if (t.tag() == MorphismTerm::Tag::Id) return C("iden");
            return braid_factor(t, ctx);
        };
        std::size_t wl = width(l), wr = width(r);
        if (wl == 1 && wr == 1)
            return Expr::app(C("multm"), {part(l), part(r)});
        if (wl == 2 && wr == 1)
            return Expr::app(C("multm1"), {part(l), part(r)});
        if (wl == 1 && wr == 2)
            return Expr::app(C("multm2"), {part(l), part(r)});
    }
    throw Unencodable(f.str());
}

inline Expr braid_chain(const MorphismTerm& t, BraidContext& ctx,
                        const Expr& base) {
    std::vector<MorphismTerm> factors;
    seq_factors(t, factors);
    Expr e = base;
    bool any = false;
    for (const MorphismTerm& f : factors) {
        if (f.tag() == MorphismTerm::Tag::Id) continue;
        if (f.tag() == MorphismTerm::Tag::Par && is_identity_term(f)) continue;
        e = Expr::app(braid_factor(f, ctx), {e});
        any = true;
    }
    if (!any)
        e = Expr::app(Expr::app(Expr::constant("multm"),
                                {Expr::constant("iden"), Expr::constant("iden")}),
                      {e});
    return e;
}

} // namespace encode_detail

/// Deterministic THF encoding of an equation plus axiom set, following the
/// source listings' conventions: equations without braiding use the
/// $a-family unary-chain encoding over one atom; braided equations use the
/// c-family encoding over 2 or 3 strand variables. Axioms that have no
/// expression in the chosen family are omitted.
inline Problem encode_equation(const Equation& eq,
                               const std::vector<RewriteRule>& axioms) {
    using namespace encode_detail;
    Problem p;
    bool braided = uses_braiding(eq.lhs) || uses_braiding(eq.rhs);

    if (!braided) {
        // pick the atom: the unique non-unit atom appearing in the types
        std::vector<Atom> atoms = typecheck(eq.lhs).dom.strict_atoms();
        if (atoms.empty()) atoms = typecheck(eq.lhs).cod.strict_atoms();
        Atom x = atoms.empty() ? Atom::A : atoms[0];
        for (Atom a : atoms)
            if (a != x) throw Unencodable(typecheck(eq.lhs).dom.str());

        std::vector<std::string> used;
        struct Body {
            std::string name;
            Role role;
            std::string dom;
            Expr body;
        };
        std::vector<Body> bodies;
        auto add_eq = [&](const std::string& name, Role role,
                          const MorphismTerm& l, const MorphismTerm& r) {
            std::string dom = frob_type_name(typecheck(l).dom, x);
            FrobChain cl = frob_chain(l, x, Expr::var("X"));
            FrobChain cr = frob_chain(r, x, Expr::var("X"));
            for (const std::string& u : cl.used) used.push_back(u);
            for (const std::string& u : cr.used) used.push_back(u);
            bodies.push_back({name, role, dom,
                              Expr::eq(std::move(cl.expr), std::move(cr.expr))});
        };
        for (const RewriteRule& rule : axioms) {
            auto inst = instantiate_rule_at(rule, x);
            if (!inst) continue; // rules with morphism variables
            try {
                add_eq(sanitize(rule.name), Role::Axiom, inst->first, inst->second);
            } catch (const Unencodable&) {
                // outside the finite map (e.g. braid rules): omitted
            }
        }
        add_eq("conj", Role::Conjecture, eq.lhs, eq.rhs);

        std::vector<std::string> order = {
            "mu", "eta", "delta", "epsilon", "alpha", "invalpha", "lamb",
            "rho", "invlamb", "invrho", "muid", "idmu", "deltaid", "iddelta",
            "etaid", "ideta", "epsilonid", "idepsilon", "id"};
        for (const std::string& c : order) {
            bool is_used = false;
            for (const std::string& u : used)
                if (u == c) { is_used = true; break; }
            if (is_used)
                p.formulas.push_back(
                    Formula::type_decl(c + "_decl", c, frob_sig(c)));
        }
        for (Body& b : bodies)
            p.formulas.push_back(Formula::statement(
                b.name, b.role, {{"X", Type::named(b.dom)}}, std::move(b.body)));
        p.validate();
        return p;
    }

    // braided family
    std::size_t strands = typecheck(eq.lhs).dom.strict_atoms().size();
    if (strands < 2 || strands > 3)
        throw Unencodable(typecheck(eq.lhs).dom.str());
    BraidContext ctx{strands, false, false, false};
    auto [dom_obj, dom_ty] = braid_object(typecheck(eq.lhs).dom, strands);
    Expr lhs = braid_chain(eq.lhs, ctx, dom_obj);
    Expr rhs = braid_chain(eq.rhs, ctx, dom_obj);

    auto T = [](const char* n) { return Type::named(n); };
    auto A2 = [&](Type d, Type c) { return Type::arrow({d, c}); };
    Type c = T("c"), cc = T("cc"), ccxc = T("ccxc"), cxcc = T("cxcc");
    Type c2c = A2(c, c), cc2cc = A2(cc, cc);

    p.formulas.push_back(Formula::type_decl("c_type", "c", T("$tType")));
    p.formulas.push_back(Formula::type_decl("cc_type", "cc", T("$tType")));
    if (strands == 3) {
        p.formulas.push_back(Formula::type_decl("ccxc_type", "ccxc", T("$tType")));
        p.formulas.push_back(Formula::type_decl("cxcc_type", "cxcc", T("$tType")));
    }
    if (ctx.needs_alpha) {
        p.formulas.push_back(Formula::type_decl("alpha_decl", "alpha", A2(ccxc, cxcc)));
        p.formulas.push_back(
            Formula::type_decl("invalpha_decl", "invalpha", A2(cxcc, ccxc)));
    }
    p.formulas.push_back(Formula::type_decl("braid_decl", "braid", cc2cc));
    p.formulas.push_back(Formula::type_decl("up_decl", "up", c2c));
    p.formulas.push_back(Formula::type_decl("down_decl", "down", c2c));
    if (strands == 3) {
        p.formulas.push_back(Formula::type_decl("up1_decl", "up1", cc2cc));
        p.formulas.push_back(Formula::type_decl("down1_decl", "down1", cc2cc));
    }
    p.formulas.push_back(Formula::type_decl("invbraid_decl", "invbraid", cc2cc));
    if (ctx.needs_braid12) {
        p.formulas.push_back(Formula::type_decl("braid1_decl", "braid1", A2(cxcc, ccxc)));
        p.formulas.push_back(Formula::type_decl("braid2_decl", "braid2", A2(ccxc, cxcc)));
    }
    p.formulas.push_back(Formula::type_decl("iden_decl", "iden", c2c));
    p.formulas.push_back(
        Formula::type_decl("multo_decl", "multo", Type::arrow({c, c, cc})));
    if (strands == 3) {
        p.formulas.push_back(
            Formula::type_decl("multo1_decl", "multo1", Type::arrow({cc, c, ccxc})));
        p.formulas.push_back(
            Formula::type_decl("multo2_decl", "multo2", Type::arrow({c, cc, cxcc})));
    }
    p.formulas.push_back(Formula::type_decl(
        "multm_decl", "multm", Type::arrow({c2c, c2c, cc2cc})));
    if (strands == 3) {
        p.formulas.push_back(Formula::type_decl(
            "multm1_decl", "multm1",
            Type::arrow({cc2cc, c2c, A2(ccxc, ccxc)})));
        p.formulas.push_back(Formula::type_decl(
            "multm2_decl", "multm2",
            Type::arrow({c2c, cc2cc, A2(cxcc, cxcc)})));
    }

    // the braided-category preamble, as in the source listings
    auto C = [](const char* n) { return Expr::constant(n); };
    auto V = [](const char* n) { return Expr::var(n); };
    auto app = [](Expr h, std::vector<Expr> xs) {
        return Expr::app(std::move(h), std::move(xs));
    };
    auto stmt = [&](const char* name,
                    std::vector<std::pair<std::string, Type>> vars, Expr l,
                    Expr r) {
        p.formulas.push_back(Formula::statement(
            name, Role::Axiom, std::move(vars), Expr::eq(std::move(l), std::move(r))));
    };
    stmt("axio0", {{"X", c}}, app(C("iden"), {V("X")}), V("X"));
    stmt("axio0A", {{"X", c}}, app(C("down"), {app(C("down"), {V("X")})}), V("X"));
    stmt("axio0B", {{"X", c}}, app(C("up"), {app(C("up"), {V("X")})}), V("X"));
    stmt("axio0C", {{"X", c}, {"F", c2c}},
         app(V("F"), {app(C("up"), {V("X")})}),
         app(C("up"), {app(V("F"), {V("X")})}));
    stmt("axio0D", {{"X", c}, {"F", c2c}},
         app(V("F"), {app(C("down"), {V("X")})}),
         app(C("down"), {app(V("F"), {V("X")})}));
    stmt("axio", {{"X", c}, {"Y", c}, {"F", c2c}, {"G", c2c}},
         app(app(C("multm"), {V("F"), V("G")}),
             {app(C("multo"), {V("X"), V("Y")})}),
         app(C("multo"), {app(V("F"), {V("X")}), app(V("G"), {V("Y")})}));
    stmt("axio1", {{"X", c}, {"Y", c}},
         app(C("braid"), {app(C("multo"), {V("X"), V("Y")})}),
         app(C("multo"), {app(C("up"), {V("Y")}), app(C("down"), {V("X")})}));
    stmt("axio1A", {{"X", c}, {"Y", c}},
         app(C("invbraid"), {app(C("multo"), {V("X"), V("Y")})}),
         app(C("multo"), {app(C("down"), {V("Y")}), app(C("up"), {V("X")})}));
    if (strands == 3) {
        stmt("axioA", {{"X", c}, {"Y", c}, {"Z", c}, {"F", cc2cc}, {"G", c2c}},
             app(app(C("multm1"), {V("F"), V("G")}),
                 {app(C("multo1"),
                      {app(C("multo"), {V("X"), V("Y")}), V("Z")})}),
             app(C("multo1"),
                 {app(V("F"), {app(C("multo"), {V("X"), V("Y")})}),
                  app(V("G"), {V("Z")})}));
        stmt("axioAA", {{"X", c}, {"Y", c}, {"Z", c}, {"F", c2c}, {"G", cc2cc}},
             app(app(C("multm2"), {V("F"), V("G")}),
                 {app(C("multo2"),
                      {V("X"), app(C("multo"), {V("Y"), V("Z")})})}),
             app(C("multo2"),
                 {app(V("F"), {V("X")}),
                  app(V("G"), {app(C("multo"), {V("Y"), V("Z")})})}));
        if (ctx.needs_alpha) {
            stmt("axio2", {{"X", c}, {"Y", c}, {"Z", c}},
                 app(C("alpha"),
                     {app(C("multo1"),
                          {app(C("multo"), {V("X"), V("Y")}), V("Z")})}),
                 app(C("multo2"), {V("X"), app(C("multo"), {V("Y"), V("Z")})}));
            stmt("axio2A", {{"X", c}, {"Y", c}, {"Z", c}},
                 app(C("invalpha"),
                     {app(C("multo2"),
                          {V("X"), app(C("multo"), {V("Y"), V("Z")})})}),
                 app(C("multo1"),
                     {app(C("multo"), {V("X"), V("Y")}), V("Z")}));
        }
        if (ctx.needs_braid12) {
            stmt("axio1B", {{"X", c}, {"Y", c}, {"Z", c}},
                 app(C("braid1"),
                     {app(C("multo2"),
                          {V("X"), app(C("multo"), {V("Y"), V("Z")})})}),
                 app(C("multo1"),
                     {app(C("up1"), {app(C("multo"), {V("Y"), V("Z")})}),
                      app(C("down"), {V("X")})}));
            stmt("axio1C", {{"X", c}, {"Y", c}, {"Z", c}},
                 app(C("braid2"),
                     {app(C("multo1"),
                          {app(C("multo"), {V("X"), V("Y")}), V("Z")})}),
                 app(C("multo2"),
                     {app(C("up"), {V("Z")}),
                      app(C("down1"), {app(C("multo"), {V("X"), V("Y")})})}));
        }
    }

    std::vector<std::pair<std::string, Type>> vars = {{"X", c}, {"Y", c}};
    if (strands == 3) vars.push_back({"Z", c});
    p.formulas.push_back(Formula::statement("conj", Role::Conjecture,
                                            std::move(vars),
                                            Expr::eq(std::move(lhs), std::move(rhs))));
    p.validate();
    return p;
}

/// Renames the `$`-prefixed user types of the Frobenius family to plain
/// names and declares them, for downstream provers that reserve `$`.
inline Problem strict_tptp(const Problem& in) {
    auto rename = [](const std::string& n) -> std::string {
        static const std::map<std::string, std::string> m = {
            {"$a", "a"},       {"$aa", "aa"},   {"$aaxa", "aaxa"},
            {"$axaa", "axaa"}, {"$ja", "ja"},   {"$ai", "ai"},
        };
        auto it = m.find(n);
        return it == m.end() ? n : it->second;
    };
    struct Walk {
        const decltype(rename)& rn;
        std::vector<std::string> seen;
        Type type(const Type& t) {
            if (!t.is_arrow()) {
                std::string n = rn(t.atom);
                if (n != t.atom) {
                    bool found = false;
                    for (const std::string& s : seen)
                        if (s == n) { found = true; break; }
                    if (!found) seen.push_back(n);
                }
                return Type::named(n);
            }
            std::vector<Type> parts;
            for (const Type& p : t.chain) parts.push_back(type(p));
            return Type::arrow(std::move(parts));
        }
    } w{rename, {}};
    Problem out;
    std::vector<Formula> body;
    for (const Formula& f : in.formulas) {
        Formula g = f;
        if (g.role == Role::Type) g.const_type = w.type(f.const_type);
        for (auto& [v, t] : g.vars) t = w.type(t);
        body.push_back(std::move(g));
    }
    for (const std::string& n : w.seen)
        out.formulas.push_back(
            Formula::type_decl(n + "_type", n, Type::named("$tType")));
    for (Formula& f : body) out.formulas.push_back(std::move(f));
    return out;
}

// --- fixed problems transcribed from the source listings (parenthesization
// repaired where the originals are truncated; repairs are noted in the
// golden files) ---

namespace listing_text {

inline const char* pentagon() {
    return R"(thf(c_type,type,(c: $tType)).
thf(one,type,(one: c)).
thf(alpha_decl,type,(alpha: c > c)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > c)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (c > c))).
thf(axio1,axiom,(! [X: c, Y: c, Z: c]: ( (alpha @ (multo @ (multo @ X @ Y) @ Z)) = (multo @ X @ (multo @ Y @ Z)) ))).
thf(axio2,axiom,(! [X: c]: ( (iden @ X) = X ))).
thf(axio3,axiom,(! [X: c, Y: c, Z: c, W: c]: ( ((multm @ alpha @ iden) @ (multo @ (multo @ (multo @ W @ X) @ Y) @ Z)) = (multo @ (multo @ W @ (multo @ X @ Y)) @ Z) ))).
thf(axio3A,axiom,(! [X: c, Y: c, Z: c, W: c]: ( ((multm @ iden @ alpha) @ (multo @ W @ (multo @ (multo @ X @ Y) @ Z))) = (multo @ W @ (multo @ X @ (multo @ Y @ Z))) ))).
thf(conje,conjecture,(! [X: c, Y: c, Z: c, W: c]: ( ((multm @ iden @ alpha) @ (alpha @ ((multm @ alpha @ iden) @ (multo @ (multo @ (multo @ W @ X) @ Y) @ Z)))) = (alpha @ (alpha @ (multo @ (multo @ (multo @ W @ X) @ Y) @ Z))) ))).
)";
}

inline const char* triangle() {
    return R"(thf(c_type,type,(c: $tType)).
thf(one,type,(one: c)).
thf(alpha_decl,type,(alpha: c > c)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > c)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (c > c))).
thf(left_decl,type,(left: c > c)).
thf(right_decl,type,(right: c > c)).
thf(axio1,axiom,(! [X: c, Y: c, Z: c]: ( (alpha @ (multo @ (multo @ X @ Y) @ Z)) = (multo @ X @ (multo @ Y @ Z)) ))).
thf(axio2,axiom,(! [X: c]: ( (iden @ X) = X ))).
thf(axio2A,axiom,(! [X: c]: ( (left @ (multo @ one @ X)) = X ))).
thf(axio2B,axiom,(! [X: c]: ( (right @ (multo @ X @ one)) = X ))).
thf(axio2C,axiom,(! [X: c, Y: c]: ( ((multm @ right @ iden) @ (multo @ (multo @ X @ one) @ Y)) = (multo @ X @ Y) ))).
thf(axio2D,axiom,(! [X: c, Y: c]: ( ((multm @ iden @ left) @ (multo @ X @ (multo @ one @ Y))) = (multo @ X @ Y) ))).
thf(conje2,conjecture,(! [X: c, Y: c]: ( ((multm @ iden @ left) @ (alpha @ (multo @ (multo @ X @ one) @ Y))) = ((multm @ right @ iden) @ (multo @ (multo @ X @ one) @ Y)) ))).
)";
}

inline const char* braid_naturality() {
    return R"(thf(c_type,type,(c: $tType)).
thf(cc_type,type,(cc: $tType)).
thf(braid_decl,type,(braid: cc > cc)).
thf(up_decl,type,(up: c > c)).
thf(down_decl,type,(down: c > c)).
thf(multo_decl,type,(multo: c > c > cc)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc))).
thf(axio,axiom,(! [X: c, Y: c, F: c > c, G: c > c]: ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y)) ))).
thf(axio1,axiom,(! [X: c, Y: c]: ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X)) ))).
thf(axio1A,axiom,(! [X: c, F: c > c]: ( (F @ (up @ X)) = (up @ (F @ X)) ))).
thf(axio1B,axiom,(! [X: c, F: c > c]: ( (F @ (down @ X)) = (down @ (F @ X)) ))).
thf(conje,conjecture,(! [X: c, Y: c, F: c > c, G: c > c]: ( (braid @ ((multm @ F @ G) @ (multo @ X @ Y))) = ((multm @ G @ F) @ (braid @ (multo @ X @ Y))) ))).
)";
}

inline const char* braid_inverse() {
    return R"(thf(c_type,type,(c: $tType)).
thf(cc_type,type,(cc: $tType)).
thf(braid_decl,type,(braid: cc > cc)).
thf(up_decl,type,(up: c > c)).
thf(down_decl,type,(down: c > c)).
thf(invbraid_decl,type,(invbraid: cc > cc)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > cc)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc))).
thf(axio0,axiom,(! [X: c]: ( (iden @ X) = X ))).
thf(axio,axiom,(! [X: c, Y: c, F: c > c, G: c > c]: ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y)) ))).
thf(axio1,axiom,(! [X: c, Y: c]: ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X)) ))).
thf(axio1A,axiom,(! [X: c, Y: c]: ( (invbraid @ (multo @ X @ Y)) = (multo @ (down @ Y) @ (up @ X)) ))).
thf(axio2,axiom,(! [X: c]: ( (up @ (up @ X)) = X ))).
thf(axio2A,axiom,(! [X: c]: ( (down @ (down @ X)) = X ))).
thf(conje,conjecture,(! [X: c, Y: c]: ( (invbraid @ (braid @ (multo @ X @ Y))) = (braid @ (invbraid @ (multo @ X @ Y))) ))).
thf(conje1,conjecture,(! [X: c, Y: c]: ( (invbraid @ (braid @ (multo @ X @ Y))) = ((multm @ iden @ iden) @ (multo @ X @ Y)) ))).
thf(conje2,conjecture,(! [X: c, Y: c]: ( (braid @ (invbraid @ (multo @ X @ Y))) = ((multm @ iden @ iden) @ (multo @ X @ Y)) ))).
)";
}

inline const char* hexagon_preamble() {
    return R"(thf(c_type,type,(c: $tType)).
thf(cc_type,type,(cc: $tType)).
thf(ccxc_type,type,(ccxc: $tType)).
thf(cxcc_type,type,(cxcc: $tType)).
thf(alpha_decl,type,(alpha: ccxc > cxcc)).
thf(invalpha_decl,type,(invalpha: cxcc > ccxc)).
thf(braid_decl,type,(braid: cc > cc)).
thf(up_decl,type,(up: c > c)).
thf(down_decl,type,(down: c > c)).
thf(up1_decl,type,(up1: cc > cc)).
thf(down1_decl,type,(down1: cc > cc)).
thf(invbraid_decl,type,(invbraid: cc > cc)).
thf(braid1_decl,type,(braid1: cxcc > ccxc)).
thf(braid2_decl,type,(braid2: ccxc > cxcc)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > cc)).
thf(multo1_decl,type,(multo1: cc > c > ccxc)).
thf(multo2_decl,type,(multo2: c > cc > cxcc)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc))).
thf(multm1_decl,type,(multm1: (cc > cc) > (c > c) > (ccxc > ccxc))).
thf(multm2_decl,type,(multm2: (c > c) > (cc > cc) > (cxcc > cxcc))).
thf(axio0,axiom,(! [X: c]: ( (iden @ X) = X ))).
thf(axio0A,axiom,(! [X: c]: ( (down @ (down @ X)) = X ))).
thf(axio0B,axiom,(! [X: c]: ( (up @ (up @ X)) = X ))).
thf(axio,axiom,(! [X: c, Y: c, F: c > c, G: c > c]: ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y)) ))).
thf(axioA,axiom,(! [X: c, Y: c, Z: c, F: cc > cc, G: c > c]: ( ((multm1 @ F @ G) @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo1 @ (F @ (multo @ X @ Y)) @ (G @ Z)) ))).
thf(axioAA,axiom,(! [X: c, Y: c, Z: c, F: c > c, G: cc > cc]: ( ((multm2 @ F @ G) @ (multo2 @ X @ (multo @ Y @ Z))) = (multo2 @ (F @ X) @ (G @ (multo @ Y @ Z))) ))).
thf(axio1,axiom,(! [X: c, Y: c]: ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X)) ))).
thf(axio1A,axiom,(! [X: c, Y: c]: ( (invbraid @ (multo @ X @ Y)) = (multo @ (down @ Y) @ (up @ X)) ))).
thf(axio1B,axiom,(! [X: c, Y: c, Z: c]: ( (braid1 @ (multo2 @ X @ (multo @ Y @ Z))) = (multo1 @ (up1 @ (multo @ Y @ Z)) @ (down @ X)) ))).
thf(axio1C,axiom,(! [X: c, Y: c, Z: c]: ( (braid2 @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo2 @ (up @ Z) @ (down1 @ (multo @ X @ Y))) ))).
thf(axio2,axiom,(! [X: c, Y: c, Z: c]: ( (alpha @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo2 @ X @ (multo @ Y @ Z)) ))).
thf(axio2A,axiom,(! [X: c, Y: c, Z: c]: ( (invalpha @ (multo2 @ X @ (multo @ Y @ Z))) = (multo1 @ (multo @ X @ Y) @ Z) ))).
)";
}

inline const char* hexagon_conjectures() {
    return R"(thf(conje,conjecture,(! [X: c, Y: c, Z: c]: ( (invalpha @ ((multm2 @ iden @ braid) @ (alpha @ ((multm1 @ braid @ iden) @ (invalpha @ (multo2 @ X @ (multo @ Y @ Z))))))) = (braid1 @ (multo2 @ X @ (multo @ Y @ Z))) ))).
thf(conj1,conjecture,(! [X: c, Y: c, Z: c]: ( (alpha @ ((multm1 @ braid @ iden) @ (invalpha @ ((multm2 @ iden @ braid) @ (alpha @ (multo1 @ (multo @ X @ Y) @ Z)))))) = (braid2 @ (multo1 @ (multo @ X @ Y) @ Z)) ))).
)";
}

inline const char* yang_baxter_tail() {
    return R"(thf(axio0C,axiom,(! [X: c, F: c > c]: ( (F @ (up @ X)) = (up @ (F @ X)) ))).
thf(axio0D,axiom,(! [X: c, F: c > c]: ( (F @ (down @ X)) = (down @ (F @ X)) ))).
thf(conjeYB,conjecture,(! [X: c, Y: c, Z: c]: ( ((multm1 @ braid @ iden) @ (invalpha @ ((multm2 @ iden @ braid) @ (alpha @ ((multm1 @ braid @ iden) @ (multo1 @ (multo @ X @ Y) @ Z)))))) = (invalpha @ ((multm2 @ iden @ braid) @ (alpha @ ((multm1 @ braid @ iden) @ (invalpha @ ((multm2 @ iden @ braid) @ (multo2 @ X @ (multo @ Y @ Z)))))))) ))).
)";
}

inline const char* frobenius_decls() {
    return R"(thf(alpha_decl,type,(alpha: $aaxa > $axaa)).
thf(invalpha_decl,type,(invalpha: $axaa > $aaxa)).
thf(mu_decl,type,(mu: $aa > $a)).
thf(eta_decl,type,(eta: $i > $a)).
thf(muid_decl,type,(muid: $aaxa > $aa)).
thf(idmu_decl,type,(idmu: $axaa > $aa)).
thf(etaid_decl,type,(etaid: $ja > $aa)).
thf(ideta_decl,type,(ideta: $ai > $aa)).
thf(lamb_decl,type,(lamb: $ja > $a)).
thf(rho_decl,type,(rho: $ai > $a)).
thf(delta_decl,type,(delta: $a > $aa)).
thf(deltaid_decl,type,(deltaid: $aa > $aaxa)).
thf(iddelta_decl,type,(iddelta: $aa > $axaa)).
thf(epsilon_decl,type,(epsilon: $a > $i)).
thf(invlamb_decl,type,(invlamb: $a > $ja)).
thf(invrho_decl,type,(invrho: $a > $ai)).
thf(epsilonid_decl,type,(epsilonid: $aa > $ja)).
thf(idepsilon_decl,type,(idepsilon: $aa > $ai)).
thf(id_decl,type,(id: $a > $a)).
thf(beta1_decl,type,(beta1: $a > $ai)).
thf(beta2_decl,type,(beta2: $a > $ja)).
thf(invbeta1_decl,type,(invbeta1: $ai > $a)).
thf(invbeta2_decl,type,(invbeta2: $ja > $a)).
)";
}

inline const char* frobenius_axioms() {
    return R"(thf(axio1,axiom,(! [X: $ja]: ( (lamb @ X) = (mu @ (etaid @ X)) ))).
thf(axio2,axiom,(! [X: $ai]: ( (rho @ X) = (mu @ (ideta @ X)) ))).
thf(axio3,axiom,(! [X: $aaxa]: ( (mu @ (idmu @ (alpha @ X))) = (mu @ (muid @ X)) ))).
thf(axio4,axiom,(! [X: $a]: ( (iddelta @ (delta @ X)) = (alpha @ (deltaid @ (delta @ X))) ))).
thf(axio5,axiom,(! [X: $a]: ( (epsilonid @ (delta @ X)) = (invlamb @ X) ))).
thf(axio6,axiom,(! [X: $a]: ( (idepsilon @ (delta @ X)) = (invrho @ X) ))).
thf(axio7,axiom,(! [X: $aa]: ( (muid @ (invalpha @ (iddelta @ X))) = (delta @ (mu @ X)) ))).
thf(axio8,axiom,(! [X: $aa]: ( (idmu @ (alpha @ (deltaid @ X))) = (delta @ (mu @ X)) ))).
thf(axio9,axiom,(! [X: $a]: ( (mu @ (ideta @ (beta1 @ X))) = (id @ X) ))).
thf(axio10,axiom,(! [X: $a]: ( (mu @ (etaid @ (beta2 @ X))) = (id @ X) ))).
thf(axio11,axiom,(! [X: $a]: ( (invbeta1 @ (idepsilon @ (delta @ X))) = (id @ X) ))).
thf(axio12,axiom,(! [X: $a]: ( (invbeta2 @ (epsilonid @ (delta @ X))) = (id @ X) ))).
thf(axio13,axiom,(! [X: $a]: ( (id @ (id @ X)) = (id @ X) ))).
thf(axio14,axiom,(! [X: $a]: ( (delta @ (id @ X)) = (delta @ X) ))).
)";
}

inline const char* frobenius_conjectures() {
    return R"(thf(conj,conjecture,(! [X: $ja]: ( (idepsilon @ (idmu @ (alpha @ (deltaid @ (etaid @ X))))) = (idepsilon @ (delta @ (mu @ (etaid @ X)))) ))).
thf(conj2,conjecture,(! [X: $a]: ( (invbeta1 @ (idepsilon @ (delta @ (mu @ (etaid @ (beta2 @ X)))))) = (id @ X) ))).
thf(conj3,conjecture,(! [X: $ai]: ( (epsilonid @ (muid @ (invalpha @ (iddelta @ (ideta @ X))))) = (epsilonid @ (delta @ (mu @ (ideta @ X)))) ))).
thf(conj4,conjecture,(! [X: $a]: ( (invbeta2 @ (epsilonid @ (delta @ (mu @ (ideta @ (beta1 @ X)))))) = (id @ X) ))).
)";
}

inline const char* zigzag_conjectures() {
    return R"(thf(conj5,conjecture,(! [X: $a]: ( (invbeta2 @ (epsilonid @ (muid @ (invalpha @ (iddelta @ (ideta @ (beta1 @ X))))))) = (id @ X) ))).
thf(conj6,conjecture,(! [X: $a]: ( (invbeta1 @ (idepsilon @ (idmu @ (alpha @ (deltaid @ (etaid @ (beta2 @ X))))))) = (id @ X) ))).
thf(conj7,conjecture,(! [X: $a]: ( (invbeta2 @ (epsilonid @ (muid @ (invalpha @ (iddelta @ (ideta @ (beta1 @ X))))))) = (invbeta1 @ (idepsilon @ (idmu @ (alpha @ (deltaid @ (etaid @ (beta2 @ X))))))) ))).
)";
}

inline const char* corpus_conjectures() {
    return R"(thf(conj8,conjecture,(! [X: $aaxa]: ( (epsilon @ (mu @ (muid @ X))) = (epsilon @ (mu @ (idmu @ (alpha @ X)))) ))).
thf(conj9,conjecture,(! [X: $i]: ( (alpha @ (deltaid @ (delta @ (eta @ X)))) = (iddelta @ (delta @ (eta @ X))) ))).
thf(conj10,conjecture,(! [X: $a]: ( (muid @ (invalpha @ (iddelta @ (ideta @ (beta1 @ X))))) = (delta @ X) ))).
thf(conj11,conjecture,(! [X: $a]: ( (idmu @ (alpha @ (deltaid @ (etaid @ (beta2 @ X))))) = (delta @ X) ))).
thf(conj12,conjecture,(! [X: $a]: ( (muid @ (invalpha @ (iddelta @ (ideta @ (beta1 @ X))))) = (idmu @ (alpha @ (deltaid @ (etaid @ (beta2 @ X))))) ))).
thf(conj13,conjecture,(! [X: $a]: ( (muid @ (invalpha @ (alpha @ (deltaid @ (delta @ X))))) = (delta @ (mu @ (delta @ X))) ))).
thf(conj14,conjecture,(! [X: $a]: ( (muid @ (invalpha @ (alpha @ (deltaid @ (delta @ X))))) = (idmu @ (iddelta @ (delta @ X))) ))).
thf(conj15,conjecture,(! [X: $a]: ( (idmu @ (iddelta @ (delta @ X))) = (delta @ (mu @ (delta @ X))) ))).
thf(conj16,conjecture,(! [X: $aa]: ( (mu @ (idmu @ (alpha @ (invalpha @ (iddelta @ X))))) = (mu @ (muid @ (deltaid @ X))) ))).
thf(conj17,conjecture,(! [X: $aa]: ( (mu @ (muid @ (deltaid @ X))) = (mu @ (delta @ (mu @ X))) ))).
thf(conj18,conjecture,(! [X: $aa]: ( (mu @ (idmu @ (alpha @ (invalpha @ (iddelta @ X))))) = (mu @ (delta @ (mu @ X))) ))).
)";
}

} // namespace listing_text

inline Problem pentagon_problem() { return parse(listing_text::pentagon()); }
inline Problem triangle_problem() { return parse(listing_text::triangle()); }
inline Problem braid_naturality_problem() {
    return parse(listing_text::braid_naturality());
}
inline Problem braid_inverse_problem() {
    return parse(listing_text::braid_inverse());
}
inline Problem hexagon_problem() {
    return parse(std::string(listing_text::hexagon_preamble()) +
                 listing_text::hexagon_conjectures());
}
inline Problem yang_baxter_problem() {
    return parse(std::string(listing_text::hexagon_preamble()) +
                 listing_text::yang_baxter_tail());
}
inline Problem frobenius_problem() {
    return parse(std::string(listing_text::frobenius_decls()) +
                 listing_text::frobenius_axioms() +
                 listing_text::frobenius_conjectures());
}
inline Problem zigzag_problem() {
    return parse(std::string(listing_text::frobenius_decls()) +
                 listing_text::frobenius_axioms() +
                 listing_text::zigzag_conjectures());
}
inline Problem frobenius_corpus_problem() {
    return parse(std::string(listing_text::frobenius_decls()) +
                 listing_text::frobenius_axioms() +
                 listing_text::frobenius_conjectures() +
                 listing_text::zigzag_conjectures() +
                 listing_text::corpus_conjectures());
}

} // namespace occ::tptp
