#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "occ/object.hpp"

namespace occ {

enum class GenKind : unsigned char {
    Mu,        // mu[O]      : O*O -> O
    Eta,       // eta[O]     : I -> O
    Delta,     // delta[O]   : O -> O*O
    Epsilon,   // epsilon[O] : O -> I
    Alpha,     // alpha[x,y,z]  : (x*y)*z -> x*(y*z)
    AlphaInv,  // alpha~[x,y,z] : x*(y*z) -> (x*y)*z
    Lambda,    // lambda[x]  : I*x -> x
    LambdaInv, // lambda~[x] : x -> I*x
    Rho,       // rho[x]     : x*I -> x
    RhoInv,    // rho~[x]    : x -> x*I
    Sigma,     // sigma[x,y]  : x*y -> y*x
    SigmaInv,  // sigma~[x,y] : y*x -> x*y
};

inline bool is_frobenius_kind(GenKind k) {
    return k == GenKind::Mu || k == GenKind::Eta || k == GenKind::Delta ||
           k == GenKind::Epsilon;
}

inline bool is_coherence_kind(GenKind k) {
    switch (k) {
        case GenKind::Alpha:
        case GenKind::AlphaInv:
        case GenKind::Lambda:
        case GenKind::LambdaInv:
        case GenKind::Rho:
        case GenKind::RhoInv: return true;
        default: return false;
    }
}

inline const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Mu: return "mu";
        case GenKind::Eta: return "eta";
        case GenKind::Delta: return "delta";
        case GenKind::Epsilon: return "epsilon";
        case GenKind::Alpha: case GenKind::AlphaInv: return "alpha";
        case GenKind::Lambda: case GenKind::LambdaInv: return "lambda";
        case GenKind::Rho: case GenKind::RhoInv: return "rho";
        case GenKind::Sigma: case GenKind::SigmaInv: return "sigma";
    }
    return "?";
}

inline bool gen_kind_is_inverse(GenKind k) {
    return k == GenKind::AlphaInv || k == GenKind::LambdaInv ||
           k == GenKind::RhoInv || k == GenKind::SigmaInv;
}

/// Inverse of an invertible (structural) kind.
inline GenKind inverse_kind(GenKind k) {
    switch (k) {
        case GenKind::Alpha: return GenKind::AlphaInv;
        case GenKind::AlphaInv: return GenKind::Alpha;
        case GenKind::Lambda: return GenKind::LambdaInv;
        case GenKind::LambdaInv: return GenKind::Lambda;
        case GenKind::Rho: return GenKind::RhoInv;
        case GenKind::RhoInv: return GenKind::Rho;
        case GenKind::Sigma: return GenKind::SigmaInv;
        case GenKind::SigmaInv: return GenKind::Sigma;
        default: throw std::logic_error("generator is not invertible");
    }
}

/// A generator of the open-closed cobordism category, with its typed
/// signature derivable from kind and parameters.
struct Generator {
    GenKind kind;
    Atom frob_atom = Atom::A;       // for mu/eta/delta/epsilon
    std::vector<ObjectExpr> params; // for alpha (3), lambda/rho (1), sigma (2)

    static Generator frobenius(GenKind k, Atom o) {
        if (!is_frobenius_kind(k)) throw std::logic_error("not a Frobenius kind");
        if (o == Atom::I) throw std::invalid_argument("Frobenius generator on unit atom");
        Generator g;
        g.kind = k;
        g.frob_atom = o;
        return g;
    }
    static Generator structural(GenKind k, std::vector<ObjectExpr> params) {
        Generator g;
        g.kind = k;
        g.params = std::move(params);
        std::size_t want = 0;
        switch (k) {
            case GenKind::Alpha: case GenKind::AlphaInv: want = 3; break;
            case GenKind::Lambda: case GenKind::LambdaInv:
            case GenKind::Rho: case GenKind::RhoInv: want = 1; break;
            case GenKind::Sigma: case GenKind::SigmaInv: want = 2; break;
            default: throw std::logic_error("not a structural kind");
        }
        if (g.params.size() != want)
            throw std::invalid_argument("wrong parameter count for generator");
        return g;
    }

    ObjectExpr dom() const {
        ObjectExpr o(frob_atom);
        switch (kind) {
            case GenKind::Mu: return tensor(o, o);
            case GenKind::Eta: return obj_I();
            case GenKind::Delta: return o;
            case GenKind::Epsilon: return o;
            case GenKind::Alpha: return tensor(tensor(params[0], params[1]), params[2]);
            case GenKind::AlphaInv: return tensor(params[0], tensor(params[1], params[2]));
            case GenKind::Lambda: return tensor(obj_I(), params[0]);
            case GenKind::LambdaInv: return params[0];
            case GenKind::Rho: return tensor(params[0], obj_I());
            case GenKind::RhoInv: return params[0];
            case GenKind::Sigma: return tensor(params[0], params[1]);
            case GenKind::SigmaInv: return tensor(params[1], params[0]);
        }
        throw std::logic_error("unreachable");
    }
    ObjectExpr cod() const {
        ObjectExpr o(frob_atom);
        switch (kind) {
            case GenKind::Mu: return o;
            case GenKind::Eta: return o;
            case GenKind::Delta: return tensor(o, o);
            case GenKind::Epsilon: return obj_I();
            case GenKind::Alpha: return tensor(params[0], tensor(params[1], params[2]));
            case GenKind::AlphaInv: return tensor(tensor(params[0], params[1]), params[2]);
            case GenKind::Lambda: return params[0];
            case GenKind::LambdaInv: return tensor(obj_I(), params[0]);
            case GenKind::Rho: return params[0];
            case GenKind::RhoInv: return tensor(params[0], obj_I());
            case GenKind::Sigma: return tensor(params[1], params[0]);
            case GenKind::SigmaInv: return tensor(params[0], params[1]);
        }
        throw std::logic_error("unreachable");
    }

    std::string str() const {
        std::string s = gen_kind_name(kind);
        s += '[';
        if (is_frobenius_kind(kind)) {
            s += atom_char(frob_atom);
        } else {
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) s += ',';
                s += params[i].str();
            }
        }
        s += ']';
        if (gen_kind_is_inverse(kind)) s += '~';
        return s;
    }

    friend bool operator==(const Generator& a, const Generator& b) {
        if (a.kind != b.kind) return false;
        if (is_frobenius_kind(a.kind)) return a.frob_atom == b.frob_atom;
        if (a.params.size() != b.params.size()) return false;
        for (std::size_t i = 0; i < a.params.size(); ++i)
            if (!(a.params[i] == b.params[i])) return false;
        return true;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

/// Thrown when a sequential composition's types do not line up. Carries the
/// two object expressions and the path to the offending Seq node.
class TypeMismatch : public std::runtime_error {
public:
    TypeMismatch(ObjectExpr expected, ObjectExpr got, std::vector<int> path)
        : std::runtime_error("type mismatch: cannot compose " + got.str() +
                             " against " + expected.str() +
                             (path.empty() ? std::string()
                                           : " at path " + path_str(path))),
          expected_(std::move(expected)), got_(std::move(got)), path_(std::move(path)) {}

    const ObjectExpr& expected() const { return expected_; }
    const ObjectExpr& got() const { return got_; }
    const std::vector<int>& path() const { return path_; }

    static std::string path_str(const std::vector<int>& p) {
        std::string s;
        for (int step : p) s += char('0' + step);
        return s.empty() ? "." : s;
    }

private:
    ObjectExpr expected_, got_;
    std::vector<int> path_;
};

/// Typed morphism term: Gen | Id | Seq (g after f) | Par (tensor).
/// Immutable with structural sharing.
class MorphismTerm {
public:
    enum class Tag : unsigned char { Gen, Id, Seq, Par };

    MorphismTerm() : node_(std::make_shared<Node>(obj_I())) {}

    static MorphismTerm gen(Generator g) {
        MorphismTerm t;
        t.node_ = std::make_shared<Node>(std::move(g));
        return t;
    }
    static MorphismTerm id(ObjectExpr x) {
        MorphismTerm t;
        t.node_ = std::make_shared<Node>(std::move(x));
        return t;
    }
    /// Seq(g, f) = g after f. The side condition cod(f) = dom(g) is checked
    /// lazily by typecheck(), not at construction.
    static MorphismTerm seq(MorphismTerm after, MorphismTerm before) {
        MorphismTerm t;
        t.node_ = std::make_shared<Node>(Tag::Seq, after.node_, before.node_);
        return t;
    }
    static MorphismTerm par(MorphismTerm left, MorphismTerm right) {
        MorphismTerm t;
        t.node_ = std::make_shared<Node>(Tag::Par, left.node_, right.node_);
        return t;
    }

    Tag tag() const { return node_->tag; }
    const Generator& generator() const { return node_->gen; }
    const ObjectExpr& id_object() const { return node_->obj; }
    MorphismTerm after() const { return wrap(node_->a); }  // Seq: outer morphism
    MorphismTerm before() const { return wrap(node_->b); } // Seq: inner morphism
    MorphismTerm left() const { return wrap(node_->a); }   // Par
    MorphismTerm right() const { return wrap(node_->b); }  // Par

    /// Child by index for path addressing: 0 = after/left, 1 = before/right.
    MorphismTerm child(int i) const { return wrap(i == 0 ? node_->a : node_->b); }

    std::size_t size() const { return count(node_.get()); }

    friend bool operator==(const MorphismTerm& a, const MorphismTerm& b) {
        return eq(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const MorphismTerm& a, const MorphismTerm& b) {
        return !(a == b);
    }

    std::string str() const {
        std::string s;
        print(node_.get(), s, false);
        return s;
    }

private:
    struct Node {
        explicit Node(Generator g) : tag(Tag::Gen), gen(std::move(g)) {}
        explicit Node(ObjectExpr x) : tag(Tag::Id), obj(std::move(x)) {}
        Node(Tag t, std::shared_ptr<const Node> x, std::shared_ptr<const Node> y)
            : tag(t), a(std::move(x)), b(std::move(y)) {}
        Tag tag;
        Generator gen{GenKind::Mu, Atom::A, {}};
        ObjectExpr obj;
        std::shared_ptr<const Node> a, b;
    };

    static MorphismTerm wrap(std::shared_ptr<const Node> n) {
        MorphismTerm t;
        t.node_ = std::move(n);
        return t;
    }

    static bool eq(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a->tag != b->tag) return false;
        switch (a->tag) {
            case Tag::Gen: return a->gen == b->gen;
            case Tag::Id: return a->obj == b->obj;
            default:
                return eq(a->a.get(), b->a.get()) && eq(a->b.get(), b->b.get());
        }
    }

    static std::size_t count(const Node* n) {
        switch (n->tag) {
            case Tag::Gen:
            case Tag::Id: return 1;
            default: return 1 + count(n->a.get()) + count(n->b.get());
        }
    }

    // Diagram order: "f ; g" is g∘f. Both ';' and '*' parse left-associated
    // with '*' binding tighter, so left-nested chains print bare and any
    // other nesting is parenthesized; printing round-trips exactly.
    static void print(const Node* n, std::string& out, bool parens) {
        switch (n->tag) {
            case Tag::Gen: out += n->gen.str(); return;
            case Tag::Id:
                out += "id[";
                out += n->obj.str();
                out += ']';
                return;
            case Tag::Seq: {
                if (parens) out += '(';
                print(n->b.get(), out, false);
                out += " ; ";
                print(n->a.get(), out, n->a->tag == Tag::Seq);
                if (parens) out += ')';
                return;
            }
            case Tag::Par: {
                if (parens) out += '(';
                print(n->a.get(), out, n->a->tag == Tag::Seq);
                out += " * ";
                print(n->b.get(), out,
                      n->b->tag == Tag::Seq || n->b->tag == Tag::Par);
                if (parens) out += ')';
                return;
            }
        }
    }

    std::shared_ptr<const Node> node_;
};

struct TermType {
    ObjectExpr dom, cod;
};

namespace detail {
inline TermType typecheck_impl(const MorphismTerm& t, std::vector<int>& path) {
    switch (t.tag()) {
        case MorphismTerm::Tag::Gen:
            return {t.generator().dom(), t.generator().cod()};
        case MorphismTerm::Tag::Id:
            return {t.id_object(), t.id_object()};
        case MorphismTerm::Tag::Seq: {
            // leftmost-innermost: check the inner morphism first
            path.push_back(1);
            TermType f = typecheck_impl(t.before(), path);
            path.back() = 0;
            TermType g = typecheck_impl(t.after(), path);
            path.pop_back();
            if (!(f.cod == g.dom)) throw TypeMismatch(g.dom, f.cod, path);
            return {f.dom, g.cod};
        }
        case MorphismTerm::Tag::Par: {
            path.push_back(0);
            TermType l = typecheck_impl(t.left(), path);
            path.back() = 1;
            TermType r = typecheck_impl(t.right(), path);
            path.pop_back();
            return {tensor(l.dom, r.dom), tensor(l.cod, r.cod)};
        }
    }
    throw std::logic_error("unreachable");
}
} // namespace detail

/// Returns (dom, cod) or throws TypeMismatch at the first offending Seq node.
inline TermType typecheck(const MorphismTerm& t) {
    std::vector<int> path;
    return detail::typecheck_impl(t, path);
}

/// Sequential composition g∘f; throws TypeMismatch unless cod(f) = dom(g).
inline MorphismTerm compose(const MorphismTerm& g, const MorphismTerm& f) {
    TermType tf = typecheck(f);
    TermType tg = typecheck(g);
    if (!(tf.cod == tg.dom)) throw TypeMismatch(tg.dom, tf.cod, {});
    return MorphismTerm::seq(g, f);
}

/// Tensor product of morphisms.
inline MorphismTerm tensor(const MorphismTerm& f, const MorphismTerm& g) {
    return MorphismTerm::par(f, g);
}

// Generator term helpers.
inline MorphismTerm mu(Atom o) { return MorphismTerm::gen(Generator::frobenius(GenKind::Mu, o)); }
inline MorphismTerm eta(Atom o) { return MorphismTerm::gen(Generator::frobenius(GenKind::Eta, o)); }
inline MorphismTerm delta(Atom o) { return MorphismTerm::gen(Generator::frobenius(GenKind::Delta, o)); }
inline MorphismTerm epsilon(Atom o) { return MorphismTerm::gen(Generator::frobenius(GenKind::Epsilon, o)); }
inline MorphismTerm alpha(ObjectExpr x, ObjectExpr y, ObjectExpr z) {
    return MorphismTerm::gen(Generator::structural(GenKind::Alpha, {std::move(x), std::move(y), std::move(z)}));
}
inline MorphismTerm alpha_inv(ObjectExpr x, ObjectExpr y, ObjectExpr z) {
    return MorphismTerm::gen(Generator::structural(GenKind::AlphaInv, {std::move(x), std::move(y), std::move(z)}));
}
inline MorphismTerm lambda(ObjectExpr x) {
    return MorphismTerm::gen(Generator::structural(GenKind::Lambda, {std::move(x)}));
}
inline MorphismTerm lambda_inv(ObjectExpr x) {
    return MorphismTerm::gen(Generator::structural(GenKind::LambdaInv, {std::move(x)}));
}
inline MorphismTerm rho(ObjectExpr x) {
    return MorphismTerm::gen(Generator::structural(GenKind::Rho, {std::move(x)}));
}
inline MorphismTerm rho_inv(ObjectExpr x) {
    return MorphismTerm::gen(Generator::structural(GenKind::RhoInv, {std::move(x)}));
}
inline MorphismTerm sigma(ObjectExpr x, ObjectExpr y) {
    return MorphismTerm::gen(Generator::structural(GenKind::Sigma, {std::move(x), std::move(y)}));
}
inline MorphismTerm sigma_inv(ObjectExpr x, ObjectExpr y) {
    return MorphismTerm::gen(Generator::structural(GenKind::SigmaInv, {std::move(x), std::move(y)}));
}
inline MorphismTerm id(ObjectExpr x) { return MorphismTerm::id(std::move(x)); }

/// True when the term is an identity up to Seq/Par structure.
inline bool is_identity_term(const MorphismTerm& t) {
    switch (t.tag()) {
        case MorphismTerm::Tag::Id: return true;
        case MorphismTerm::Tag::Gen: return false;
        case MorphismTerm::Tag::Seq:
            return is_identity_term(t.after()) && is_identity_term(t.before());
        case MorphismTerm::Tag::Par:
            return is_identity_term(t.left()) && is_identity_term(t.right());
    }
    return false;
}

} // namespace occ
