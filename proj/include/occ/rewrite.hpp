#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occ/term.hpp"

namespace occ {

/// Pattern language for rewrite rules. Object patterns extend ObjectExpr
/// with variables and with dom/cod projections of morphism variables (the
/// latter appear only on instantiation sides, e.g. braid naturality).
class ObjPattern {
public:
    enum class Tag : unsigned char { Atom, Tensor, Var, DomOf, CodOf };

    static ObjPattern atom(Atom a) {
        ObjPattern p(Tag::Atom);
        p.atom_ = a;
        return p;
    }
    static ObjPattern tensor(ObjPattern l, ObjPattern r) {
        ObjPattern p(Tag::Tensor);
        p.l_ = std::make_shared<ObjPattern>(std::move(l));
        p.r_ = std::make_shared<ObjPattern>(std::move(r));
        return p;
    }
    static ObjPattern var(std::string name) {
        ObjPattern p(Tag::Var);
        p.name_ = std::move(name);
        return p;
    }
    static ObjPattern dom_of(std::string mvar) {
        ObjPattern p(Tag::DomOf);
        p.name_ = std::move(mvar);
        return p;
    }
    static ObjPattern cod_of(std::string mvar) {
        ObjPattern p(Tag::CodOf);
        p.name_ = std::move(mvar);
        return p;
    }

    Tag tag() const { return tag_; }
    Atom atom_value() const { return atom_; }
    const std::string& name() const { return name_; }
    const ObjPattern& left() const { return *l_; }
    const ObjPattern& right() const { return *r_; }

private:
    explicit ObjPattern(Tag t) : tag_(t) {}
    Tag tag_;
    Atom atom_ = Atom::I;
    std::string name_;
    std::shared_ptr<ObjPattern> l_, r_;
};

class TermPattern {
public:
    enum class Tag : unsigned char { Gen, Id, Seq, Par, MVar };

    static TermPattern gen(GenKind k, Atom frob_atom) {
        TermPattern p(Tag::Gen);
        p.kind_ = k;
        p.frob_atom_ = frob_atom;
        return p;
    }
    static TermPattern gen(GenKind k, std::vector<ObjPattern> params) {
        TermPattern p(Tag::Gen);
        p.kind_ = k;
        p.params_ = std::move(params);
        return p;
    }
    static TermPattern id(ObjPattern x) {
        TermPattern p(Tag::Id);
        p.params_.push_back(std::move(x));
        return p;
    }
    static TermPattern seq(TermPattern after, TermPattern before) {
        TermPattern p(Tag::Seq);
        p.a_ = std::make_shared<TermPattern>(std::move(after));
        p.b_ = std::make_shared<TermPattern>(std::move(before));
        return p;
    }
    static TermPattern par(TermPattern l, TermPattern r) {
        TermPattern p(Tag::Par);
        p.a_ = std::make_shared<TermPattern>(std::move(l));
        p.b_ = std::make_shared<TermPattern>(std::move(r));
        return p;
    }
    static TermPattern mvar(std::string name) {
        TermPattern p(Tag::MVar);
        p.name_ = std::move(name);
        return p;
    }

    Tag tag() const { return tag_; }
    GenKind kind() const { return kind_; }
    Atom frob_atom() const { return frob_atom_; }
    const std::vector<ObjPattern>& params() const { return params_; }
    const std::string& name() const { return name_; }
    const TermPattern& a() const { return *a_; }
    const TermPattern& b() const { return *b_; }

private:
    explicit TermPattern(Tag t) : tag_(t) {}
    Tag tag_;
    GenKind kind_ = GenKind::Mu;
    Atom frob_atom_ = Atom::A;
    std::string name_;
    std::vector<ObjPattern> params_;
    std::shared_ptr<TermPattern> a_, b_;
};

struct Substitution {
    std::map<std::string, ObjectExpr> objects;
    std::map<std::string, MorphismTerm> morphisms;
};

enum class Orientation : unsigned char { LeftToRight, RightToLeft, Both };
enum class Direction : unsigned char { Forward, Reverse };

inline const char* direction_name(Direction d) {
    return d == Direction::Forward ? "fwd" : "rev";
}

/// A named, typed rewrite rule. `family` groups the A/C instantiations and
/// paired variants of one equational law.
struct RewriteRule {
    std::string name;
    std::string family;
    TermPattern lhs;
    TermPattern rhs;
    Orientation orientation = Orientation::Both;
};

class NoMatch : public std::runtime_error {
public:
    NoMatch() : std::runtime_error("pattern does not match") {}
};
class BadPosition : public std::runtime_error {
public:
    BadPosition() : std::runtime_error("invalid position path") {}
};

namespace detail {

inline bool match_object(const ObjPattern& p, const ObjectExpr& o, Substitution& s) {
    switch (p.tag()) {
        case ObjPattern::Tag::Atom:
            return o.is_atom() && o.atom_value() == p.atom_value();
        case ObjPattern::Tag::Tensor:
            return !o.is_atom() && match_object(p.left(), o.left(), s) &&
                   match_object(p.right(), o.right(), s);
        case ObjPattern::Tag::Var: {
            auto it = s.objects.find(p.name());
            if (it != s.objects.end()) return it->second == o;
            s.objects.emplace(p.name(), o);
            return true;
        }
        case ObjPattern::Tag::DomOf:
        case ObjPattern::Tag::CodOf: {
            // Constraint check against an already-bound morphism variable
            // (Seq matches its inner side first, so bindings exist by now).
            auto it = s.morphisms.find(p.name());
            if (it == s.morphisms.end()) return false;
            TermType ty = typecheck(it->second);
            return (p.tag() == ObjPattern::Tag::DomOf ? ty.dom : ty.cod) == o;
        }
    }
    return false;
}

inline ObjectExpr instantiate_object(const ObjPattern& p, const Substitution& s) {
    switch (p.tag()) {
        case ObjPattern::Tag::Atom: return ObjectExpr(p.atom_value());
        case ObjPattern::Tag::Tensor:
            return tensor(instantiate_object(p.left(), s),
                          instantiate_object(p.right(), s));
        case ObjPattern::Tag::Var: {
            auto it = s.objects.find(p.name());
            if (it == s.objects.end())
                throw std::logic_error("unbound object variable " + p.name());
            return it->second;
        }
        case ObjPattern::Tag::DomOf:
        case ObjPattern::Tag::CodOf: {
            auto it = s.morphisms.find(p.name());
            if (it == s.morphisms.end())
                throw std::logic_error("unbound morphism variable " + p.name());
            TermType ty = typecheck(it->second);
            return p.tag() == ObjPattern::Tag::DomOf ? ty.dom : ty.cod;
        }
    }
    throw std::logic_error("unreachable");
}

inline bool match_term(const TermPattern& p, const MorphismTerm& t, Substitution& s) {
    switch (p.tag()) {
        case TermPattern::Tag::MVar: {
            auto it = s.morphisms.find(p.name());
            if (it != s.morphisms.end()) return it->second == t;
            s.morphisms.emplace(p.name(), t);
            return true;
        }
        case TermPattern::Tag::Gen: {
            if (t.tag() != MorphismTerm::Tag::Gen) return false;
            const Generator& g = t.generator();
            if (g.kind != p.kind()) return false;
            if (is_frobenius_kind(g.kind)) return g.frob_atom == p.frob_atom();
            if (g.params.size() != p.params().size()) return false;
            for (std::size_t i = 0; i < g.params.size(); ++i)
                if (!match_object(p.params()[i], g.params[i], s)) return false;
            return true;
        }
        case TermPattern::Tag::Id:
            return t.tag() == MorphismTerm::Tag::Id &&
                   match_object(p.params()[0], t.id_object(), s);
        case TermPattern::Tag::Seq:
            // inner side first so dom/cod constraints see their bindings
            return t.tag() == MorphismTerm::Tag::Seq &&
                   match_term(p.b(), t.before(), s) && match_term(p.a(), t.after(), s);
        case TermPattern::Tag::Par:
            return t.tag() == MorphismTerm::Tag::Par &&
                   match_term(p.a(), t.left(), s) && match_term(p.b(), t.right(), s);
    }
    return false;
}

inline MorphismTerm instantiate_term(const TermPattern& p, const Substitution& s) {
    switch (p.tag()) {
        case TermPattern::Tag::MVar: {
            auto it = s.morphisms.find(p.name());
            if (it == s.morphisms.end())
                throw std::logic_error("unbound morphism variable " + p.name());
            return it->second;
        }
        case TermPattern::Tag::Gen: {
            if (is_frobenius_kind(p.kind()))
                return MorphismTerm::gen(Generator::frobenius(p.kind(), p.frob_atom()));
            std::vector<ObjectExpr> params;
            for (const ObjPattern& op : p.params())
                params.push_back(instantiate_object(op, s));
            return MorphismTerm::gen(Generator::structural(p.kind(), std::move(params)));
        }
        case TermPattern::Tag::Id:
            return MorphismTerm::id(instantiate_object(p.params()[0], s));
        case TermPattern::Tag::Seq:
            return MorphismTerm::seq(instantiate_term(p.a(), s),
                                     instantiate_term(p.b(), s));
        case TermPattern::Tag::Par:
            return MorphismTerm::par(instantiate_term(p.a(), s),
                                     instantiate_term(p.b(), s));
    }
    throw std::logic_error("unreachable");
}

inline MorphismTerm replace_at(const MorphismTerm& t, const std::vector<int>& path,
                               std::size_t depth, const MorphismTerm& repl) {
    if (depth == path.size()) return repl;
    if (t.tag() != MorphismTerm::Tag::Seq && t.tag() != MorphismTerm::Tag::Par)
        throw BadPosition();
    int step = path[depth];
    if (step != 0 && step != 1) throw BadPosition();
    MorphismTerm c0 = t.child(0), c1 = t.child(1);
    MorphismTerm nc = replace_at(step == 0 ? c0 : c1, path, depth + 1, repl);
    if (t.tag() == MorphismTerm::Tag::Seq)
        return MorphismTerm::seq(step == 0 ? nc : c0, step == 1 ? nc : c1);
    return MorphismTerm::par(step == 0 ? nc : c0, step == 1 ? nc : c1);
}

inline MorphismTerm subterm_at(const MorphismTerm& t, const std::vector<int>& path) {
    MorphismTerm cur = t;
    for (int step : path) {
        if (cur.tag() != MorphismTerm::Tag::Seq && cur.tag() != MorphismTerm::Tag::Par)
            throw BadPosition();
        if (step != 0 && step != 1) throw BadPosition();
        cur = cur.child(step);
    }
    return cur;
}

} // namespace detail

/// Applies `rule` at position `path` (0 = after/left child, 1 = before/right
/// child) in direction `dir`. Throws NoMatch / BadPosition; the result
/// typechecks with the same dom/cod as the input.
inline MorphismTerm rewrite_step(const MorphismTerm& t, const RewriteRule& rule,
                                 const std::vector<int>& path, Direction dir) {
    if (dir == Direction::Forward && rule.orientation == Orientation::RightToLeft)
        throw NoMatch();
    if (dir == Direction::Reverse && rule.orientation == Orientation::LeftToRight)
        throw NoMatch();
    const TermPattern& src = dir == Direction::Forward ? rule.lhs : rule.rhs;
    const TermPattern& dst = dir == Direction::Forward ? rule.rhs : rule.lhs;
    MorphismTerm sub = detail::subterm_at(t, path);
    Substitution s;
    if (!detail::match_term(src, sub, s)) throw NoMatch();
    MorphismTerm repl = detail::instantiate_term(dst, s);
    MorphismTerm result = detail::replace_at(t, path, 0, repl);
    typecheck(result);
    return result;
}

// ---------------------------------------------------------------------------
// The standard axiom set.
// ---------------------------------------------------------------------------

namespace axioms_detail {

inline ObjPattern pA() { return ObjPattern::atom(Atom::A); }
inline ObjPattern po(Atom a) { return ObjPattern::atom(a); }
inline ObjPattern pv(const char* n) { return ObjPattern::var(n); }
inline ObjPattern pt(ObjPattern l, ObjPattern r) {
    return ObjPattern::tensor(std::move(l), std::move(r));
}

inline TermPattern G(GenKind k, Atom a) { return TermPattern::gen(k, a); }
inline TermPattern G(GenKind k, std::vector<ObjPattern> ps) {
    return TermPattern::gen(k, std::move(ps));
}
inline TermPattern Pid(ObjPattern x) { return TermPattern::id(std::move(x)); }
inline TermPattern S(TermPattern g, TermPattern f) {
    return TermPattern::seq(std::move(g), std::move(f));
}
inline TermPattern P(TermPattern l, TermPattern r) {
    return TermPattern::par(std::move(l), std::move(r));
}

inline void add_frobenius_rules(std::vector<RewriteRule>& rules, Atom o) {
    std::string suf = std::string(".") + atom_char(o);
    TermPattern muP = G(GenKind::Mu, o), etaP = G(GenKind::Eta, o);
    TermPattern delP = G(GenKind::Delta, o), epsP = G(GenKind::Epsilon, o);
    TermPattern idO = Pid(po(o));
    TermPattern alphaO = G(GenKind::Alpha, {po(o), po(o), po(o)});
    TermPattern alphaInvO = G(GenKind::AlphaInv, {po(o), po(o), po(o)});

    // associativity
    rules.push_back({"frobenius.assoc" + suf, "frobenius.assoc",
                     S(muP, P(muP, idO)),
                     S(muP, S(P(idO, muP), alphaO))});
    // coassociativity
    rules.push_back({"frobenius.coassoc" + suf, "frobenius.coassoc",
                     S(alphaO, S(P(delP, idO), delP)),
                     S(P(idO, delP), delP)});
    // unit laws
    rules.push_back({"frobenius.unit.left" + suf, "frobenius.unit.left",
                     S(muP, P(etaP, idO)), G(GenKind::Lambda, {po(o)})});
    rules.push_back({"frobenius.unit.right" + suf, "frobenius.unit.right",
                     S(muP, P(idO, etaP)), G(GenKind::Rho, {po(o)})});
    // counit laws
    rules.push_back({"frobenius.counit.left" + suf, "frobenius.counit.left",
                     S(P(epsP, idO), delP), G(GenKind::LambdaInv, {po(o)})});
    rules.push_back({"frobenius.counit.right" + suf, "frobenius.counit.right",
                     S(P(idO, epsP), delP), G(GenKind::RhoInv, {po(o)})});
    // axio7/axio8: Frobenius relation
    rules.push_back({"frobenius.relation.left" + suf, "frobenius.relation.left",
                     S(P(muP, idO), S(alphaInvO, P(idO, delP))),
                     S(delP, muP)});
    rules.push_back({"frobenius.relation.right" + suf, "frobenius.relation.right",
                     S(P(idO, muP), S(alphaO, P(delP, idO))),
                     S(delP, muP)});
}

} // namespace axioms_detail

/// The fixed rule set of the equational theory: monoidal coherence laws,
/// Frobenius laws instantiated at both atoms A and C, and the braiding laws.
/// Commutativity of mu is deliberately absent.
inline const std::vector<RewriteRule>& standard_axioms() {
    using namespace axioms_detail;
    static const std::vector<RewriteRule> rules = [] {
        std::vector<RewriteRule> r;
        ObjPattern x = pv("x"), y = pv("y"), z = pv("z"), w = pv("w");

        // monoidal pentagon
        r.push_back({"monoidal.pentagon", "monoidal.pentagon",
                     S(G(GenKind::Alpha, {pv("w"), pv("x"), pt(pv("y"), pv("z"))}),
                       G(GenKind::Alpha, {pt(pv("w"), pv("x")), pv("y"), pv("z")})),
                     S(P(Pid(pv("w")), G(GenKind::Alpha, {pv("x"), pv("y"), pv("z")})),
                       S(G(GenKind::Alpha, {pv("w"), pt(pv("x"), pv("y")), pv("z")}),
                         P(G(GenKind::Alpha, {pv("w"), pv("x"), pv("y")}), Pid(pv("z")))))});
        // monoidal triangle
        r.push_back({"monoidal.triangle", "monoidal.triangle",
                     S(P(Pid(pv("x")), G(GenKind::Lambda, {pv("y")})),
                       G(GenKind::Alpha, {pv("x"), ObjPattern::atom(Atom::I), pv("y")})),
                     P(G(GenKind::Rho, {pv("x")}), Pid(pv("y")))});
        // associator invertibility
        r.push_back({"monoidal.alpha.inverse", "monoidal.alpha.inverse",
                     S(G(GenKind::AlphaInv, {pv("x"), pv("y"), pv("z")}),
                       G(GenKind::Alpha, {pv("x"), pv("y"), pv("z")})),
                     Pid(pt(pt(pv("x"), pv("y")), pv("z")))});
        r.push_back({"monoidal.alpha.inverse.co", "monoidal.alpha.inverse",
                     S(G(GenKind::Alpha, {pv("x"), pv("y"), pv("z")}),
                       G(GenKind::AlphaInv, {pv("x"), pv("y"), pv("z")})),
                     Pid(pt(pv("x"), pt(pv("y"), pv("z"))))});
        // unitor invertibility
        r.push_back({"monoidal.lambda.inverse", "monoidal.unit.inverse",
                     S(G(GenKind::LambdaInv, {pv("x")}), G(GenKind::Lambda, {pv("x")})),
                     Pid(pt(ObjPattern::atom(Atom::I), pv("x")))});
        r.push_back({"monoidal.lambda.inverse.co", "monoidal.unit.inverse",
                     S(G(GenKind::Lambda, {pv("x")}), G(GenKind::LambdaInv, {pv("x")})),
                     Pid(pv("x"))});
        r.push_back({"monoidal.rho.inverse", "monoidal.unit.inverse",
                     S(G(GenKind::RhoInv, {pv("x")}), G(GenKind::Rho, {pv("x")})),
                     Pid(pt(pv("x"), ObjPattern::atom(Atom::I)))});
        r.push_back({"monoidal.rho.inverse.co", "monoidal.unit.inverse",
                     S(G(GenKind::Rho, {pv("x")}), G(GenKind::RhoInv, {pv("x")})),
                     Pid(pv("x"))});

        add_frobenius_rules(r, Atom::A);
        add_frobenius_rules(r, Atom::C);

        // naturality of the braiding
        r.push_back({"braid.naturality", "braid.naturality",
                     S(G(GenKind::Sigma, {ObjPattern::cod_of("f"), ObjPattern::cod_of("g")}),
                       P(TermPattern::mvar("f"), TermPattern::mvar("g"))),
                     S(P(TermPattern::mvar("g"), TermPattern::mvar("f")),
                       G(GenKind::Sigma, {ObjPattern::dom_of("f"), ObjPattern::dom_of("g")}))});
        // braiding invertibility
        r.push_back({"braid.inverse", "braid.inverse",
                     S(G(GenKind::SigmaInv, {pv("x"), pv("y")}),
                       G(GenKind::Sigma, {pv("x"), pv("y")})),
                     P(Pid(pv("x")), Pid(pv("y")))});
        r.push_back({"braid.inverse.co", "braid.inverse.co",
                     S(G(GenKind::Sigma, {pv("x"), pv("y")}),
                       G(GenKind::SigmaInv, {pv("x"), pv("y")})),
                     P(Pid(pv("y")), Pid(pv("x")))});
        // first hexagon, registered as a one-step braiding reduction
        r.push_back({"braid.hexagon1", "braid.hexagon1",
                     S(G(GenKind::AlphaInv, {pv("y"), pv("z"), pv("x")}),
                       S(P(Pid(pv("y")), G(GenKind::Sigma, {pv("x"), pv("z")})),
                         S(G(GenKind::Alpha, {pv("y"), pv("x"), pv("z")}),
                           S(P(G(GenKind::Sigma, {pv("x"), pv("y")}), Pid(pv("z"))),
                             G(GenKind::AlphaInv, {pv("x"), pv("y"), pv("z")}))))),
                     G(GenKind::Sigma, {pv("x"), pt(pv("y"), pv("z"))})});
        // second hexagon, the mirror reduction
        r.push_back({"braid.hexagon2", "braid.hexagon2",
                     S(G(GenKind::Alpha, {pv("z"), pv("x"), pv("y")}),
                       S(P(G(GenKind::Sigma, {pv("x"), pv("z")}), Pid(pv("y"))),
                         S(G(GenKind::AlphaInv, {pv("x"), pv("z"), pv("y")}),
                           S(P(Pid(pv("x")), G(GenKind::Sigma, {pv("y"), pv("z")})),
                             G(GenKind::Alpha, {pv("x"), pv("y"), pv("z")}))))),
                     G(GenKind::Sigma, {pt(pv("x"), pv("y")), pv("z")})});
        (void)x; (void)y; (void)z; (void)w;
        return r;
    }();
    return rules;
}

/// Typechecks a generic instantiation of a rule (object variables bound to
/// A, morphism variables to id[A]); both sides must agree on dom and cod.
inline void check_rule_typing(const RewriteRule& rule) {
    struct Collector {
        Substitution s;
        void visit_obj(const ObjPattern& p) {
            switch (p.tag()) {
                case ObjPattern::Tag::Var:
                    s.objects.emplace(p.name(), obj_A());
                    break;
                case ObjPattern::Tag::Tensor:
                    visit_obj(p.left());
                    visit_obj(p.right());
                    break;
                case ObjPattern::Tag::DomOf:
                case ObjPattern::Tag::CodOf:
                    s.morphisms.emplace(p.name(), MorphismTerm::id(obj_A()));
                    break;
                default: break;
            }
        }
        void visit(const TermPattern& p) {
            switch (p.tag()) {
                case TermPattern::Tag::MVar:
                    s.morphisms.emplace(p.name(), MorphismTerm::id(obj_A()));
                    break;
                case TermPattern::Tag::Gen:
                case TermPattern::Tag::Id:
                    for (const ObjPattern& op : p.params()) visit_obj(op);
                    break;
                default:
                    visit(p.a());
                    visit(p.b());
            }
        }
    } c;
    c.visit(rule.lhs);
    c.visit(rule.rhs);
    MorphismTerm l = detail::instantiate_term(rule.lhs, c.s);
    MorphismTerm r = detail::instantiate_term(rule.rhs, c.s);
    TermType tl = typecheck(l), tr = typecheck(r);
    if (!(tl.dom == tr.dom) || !(tl.cod == tr.cod))
        throw std::logic_error("rule " + rule.name + " is not type-preserving");
}

/// Instantiates both sides of a rule with every object variable bound to
/// one atom; rules with morphism variables are skipped (empty result).
inline std::optional<std::pair<MorphismTerm, MorphismTerm>>
instantiate_rule_at(const RewriteRule& rule, Atom atom) {
    struct Collector {
        bool has_mvar = false;
        Substitution s;
        Atom atom;
        void visit_obj(const ObjPattern& p) {
            switch (p.tag()) {
                case ObjPattern::Tag::Var:
                    s.objects.emplace(p.name(), ObjectExpr(atom));
                    break;
                case ObjPattern::Tag::Tensor:
                    visit_obj(p.left());
                    visit_obj(p.right());
                    break;
                case ObjPattern::Tag::DomOf:
                case ObjPattern::Tag::CodOf: has_mvar = true; break;
                default: break;
            }
        }
        void visit(const TermPattern& p) {
            switch (p.tag()) {
                case TermPattern::Tag::MVar: has_mvar = true; break;
                case TermPattern::Tag::Gen:
                case TermPattern::Tag::Id:
                    for (const ObjPattern& op : p.params()) visit_obj(op);
                    break;
                default:
                    visit(p.a());
                    visit(p.b());
            }
        }
    } c;
    c.atom = atom;
    c.visit(rule.lhs);
    c.visit(rule.rhs);
    if (c.has_mvar) return std::nullopt;
    return std::make_pair(detail::instantiate_term(rule.lhs, c.s),
                          detail::instantiate_term(rule.rhs, c.s));
}

} // namespace occ
