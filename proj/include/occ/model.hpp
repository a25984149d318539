#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "occ/matrix.hpp"
#include "occ/term.hpp"

namespace occ {

/// A finite-dimensional Frobenius algebra over the rationals, given by
/// structure tensors. The comultiplication is derived from the counit's
/// nondegenerate pairing, so the Frobenius law holds by construction and
/// degenerate inputs fail at pairing inversion.
struct FrobeniusAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    // mult[i][j][k]: coefficient of e_k in e_i * e_j
    std::vector<std::vector<std::vector<Rational>>> mult;
    std::vector<Rational> unit;   // unit as a basis combination
    std::vector<Rational> counit; // counit covector

    // derived
    RatMatrix pairing;         // g[i][j] = counit(e_i * e_j)
    RatMatrix pairing_inv;
    // comult[k][i][j]: coefficient of e_i (x) e_j in Delta(e_k)
    std::vector<std::vector<std::vector<Rational>>> comult;

    /// Computes the derived data; throws std::domain_error when the pairing
    /// is degenerate.
    void finalize() {
        pairing = RatMatrix(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Rational v;
                for (std::size_t k = 0; k < dim; ++k)
                    v += mult[i][j][k] * counit[k];
                pairing(i, j) = v;
            }
        pairing_inv = pairing.inverse();
        comult.assign(dim, std::vector<std::vector<Rational>>(
                               dim, std::vector<Rational>(dim)));
        // Delta(x) = sum_{p,q} g^{pq} (x * e_p) (x) e_q
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t p = 0; p < dim; ++p)
                for (std::size_t q = 0; q < dim; ++q) {
                    const Rational& gpq = pairing_inv(p, q);
                    if (gpq.is_zero()) continue;
                    for (std::size_t i = 0; i < dim; ++i)
                        comult[k][i][q] += gpq * mult[k][p][i];
                }
    }

    RatMatrix mu_matrix() const {
        RatMatrix m(dim, dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    m(k, i * dim + j) = mult[i][j][k];
        return m;
    }
    RatMatrix eta_matrix() const {
        RatMatrix m(dim, 1);
        for (std::size_t k = 0; k < dim; ++k) m(k, 0) = unit[k];
        return m;
    }
    RatMatrix delta_matrix() const {
        RatMatrix m(dim * dim, dim);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m(i * dim + j, k) = comult[k][i][j];
        return m;
    }
    RatMatrix epsilon_matrix() const {
        RatMatrix m(1, dim);
        for (std::size_t k = 0; k < dim; ++k) m(0, k) = counit[k];
        return m;
    }
};

/// Assignment of Frobenius algebras to the atoms A and C (the unit atom I
/// is the ground field). Immutable after construction; the independent
/// semantic oracle for every equational claim.
struct FrobeniusModel {
    std::string name;
    FrobeniusAlgebra open_algebra;   // atom A
    FrobeniusAlgebra closed_algebra; // atom C

    const FrobeniusAlgebra& algebra(Atom a) const {
        switch (a) {
            case Atom::A: return open_algebra;
            case Atom::C: return closed_algebra;
            default: throw std::invalid_argument("no algebra for the unit atom");
        }
    }

    std::size_t atom_dim(Atom a) const {
        return a == Atom::I ? 1 : algebra(a).dim;
    }
    std::size_t object_dim(const ObjectExpr& x) const {
        std::size_t d = 1;
        for (Atom a : x.strict_atoms()) d *= atom_dim(a);
        return d;
    }
};

/// A dense rational matrix with the object expressions it interprets,
/// recorded for auditability.
struct LinearMap {
    RatMatrix matrix;
    ObjectExpr dom, cod;
};

/// Functorial evaluation of a term: Seq is matrix product, Par is Kronecker
/// product, the braiding is the swap matrix, the structural isos are
/// identities on the strictified spaces.
inline LinearMap evaluate(const MorphismTerm& t, const FrobeniusModel& m) {
    struct Eval {
        const FrobeniusModel& m;

        RatMatrix swap_matrix(std::size_t dx, std::size_t dy) const {
            RatMatrix s(dx * dy, dx * dy);
            for (std::size_t i = 0; i < dx; ++i)
                for (std::size_t j = 0; j < dy; ++j)
                    s(j * dx + i, i * dy + j) = Rational(1);
            return s;
        }

        RatMatrix gen(const Generator& g) const {
            if (is_coherence_kind(g.kind))
                return RatMatrix::identity(m.object_dim(g.dom()));
            switch (g.kind) {
                case GenKind::Mu: return m.algebra(g.frob_atom).mu_matrix();
                case GenKind::Eta: return m.algebra(g.frob_atom).eta_matrix();
                case GenKind::Delta: return m.algebra(g.frob_atom).delta_matrix();
                case GenKind::Epsilon: return m.algebra(g.frob_atom).epsilon_matrix();
                case GenKind::Sigma:
                    return swap_matrix(m.object_dim(g.params[0]),
                                       m.object_dim(g.params[1]));
                case GenKind::SigmaInv:
                    return swap_matrix(m.object_dim(g.params[1]),
                                       m.object_dim(g.params[0]));
                default: throw std::logic_error("unreachable");
            }
        }

        RatMatrix run(const MorphismTerm& t) const {
            switch (t.tag()) {
                case MorphismTerm::Tag::Gen: return gen(t.generator());
                case MorphismTerm::Tag::Id:
                    return RatMatrix::identity(m.object_dim(t.id_object()));
                case MorphismTerm::Tag::Seq:
                    return run(t.after()) * run(t.before());
                case MorphismTerm::Tag::Par:
                    return kron(run(t.left()), run(t.right()));
            }
            throw std::logic_error("unreachable");
        }
    };
    TermType ty = typecheck(t);
    return {Eval{m}.run(t), ty.dom, ty.cod};
}

/// epsilon . handle^genus . eta on the closed-string algebra, where handle
/// is mu . delta. Genus 0 is the sphere.
inline Rational closed_surface_value(const FrobeniusModel& m, unsigned genus) {
    const FrobeniusAlgebra& a = m.closed_algebra;
    RatMatrix handle = a.mu_matrix() * a.delta_matrix();
    RatMatrix v = a.eta_matrix();
    for (unsigned g = 0; g < genus; ++g) v = handle * v;
    RatMatrix r = a.epsilon_matrix() * v;
    return r(0, 0);
}

struct LawResult {
    std::string law;
    bool pass = false;
    std::string witness; // basis indices on failure
};

struct ValidationReport {
    std::vector<LawResult> laws;
    bool all_pass() const {
        for (const LawResult& l : laws)
            if (!l.pass) return false;
        return true;
    }
    std::string str() const {
        std::string s;
        for (const LawResult& l : laws) {
            s += l.law;
            s += l.pass ? ": pass" : ": FAIL";
            if (!l.pass && !l.witness.empty()) s += " (" + l.witness + ")";
            s += '\n';
        }
        return s;
    }
};

namespace model_detail {

inline void check_algebra(const FrobeniusAlgebra& a, const std::string& tag,
                          ValidationReport& rep) {
    // associativity, exhaustively over basis triples
    {
        LawResult r{tag + ".associativity", true, ""};
        for (std::size_t i = 0; i < a.dim && r.pass; ++i)
            for (std::size_t j = 0; j < a.dim && r.pass; ++j)
                for (std::size_t k = 0; k < a.dim && r.pass; ++k)
                    for (std::size_t l = 0; l < a.dim; ++l) {
                        Rational left, right;
                        for (std::size_t p = 0; p < a.dim; ++p) {
                            left += a.mult[i][j][p] * a.mult[p][k][l];
                            right += a.mult[j][k][p] * a.mult[i][p][l];
                        }
                        if (left != right) {
                            r.pass = false;
                            r.witness = "i=" + std::to_string(i) +
                                        " j=" + std::to_string(j) +
                                        " k=" + std::to_string(k);
                            break;
                        }
                    }
        rep.laws.push_back(r);
    }
    // unit law
    {
        LawResult r{tag + ".unit", true, ""};
        for (std::size_t i = 0; i < a.dim && r.pass; ++i)
            for (std::size_t l = 0; l < a.dim; ++l) {
                Rational ue, eu;
                for (std::size_t p = 0; p < a.dim; ++p) {
                    ue += a.unit[p] * a.mult[p][i][l];
                    eu += a.unit[p] * a.mult[i][p][l];
                }
                Rational want(l == i ? 1 : 0);
                if (ue != want || eu != want) {
                    r.pass = false;
                    r.witness = "i=" + std::to_string(i);
                    break;
                }
            }
        rep.laws.push_back(r);
    }
    // pairing invertibility
    {
        LawResult r{tag + ".pairing", true, ""};
        try {
            (void)a.pairing.inverse();
        } catch (const std::domain_error&) {
            r.pass = false;
            r.witness = "pairing matrix singular";
        }
        rep.laws.push_back(r);
    }
    std::size_t d = a.dim;
    RatMatrix id = RatMatrix::identity(d);
    RatMatrix mu = a.mu_matrix(), de = a.delta_matrix();
    RatMatrix eta = a.eta_matrix(), eps = a.epsilon_matrix();
    // counit law: (eps (x) id) . Delta = id = (id (x) eps) . Delta
    {
        LawResult r{tag + ".counit", true, ""};
        if (kron(eps, id) * de != id || kron(id, eps) * de != id) r.pass = false;
        rep.laws.push_back(r);
    }
    // coassociativity
    {
        LawResult r{tag + ".coassociativity", true, ""};
        if (kron(de, id) * de != kron(id, de) * de) r.pass = false;
        rep.laws.push_back(r);
    }
    // Frobenius relation on strictified spaces
    {
        LawResult r{tag + ".frobenius", true, ""};
        RatMatrix dm = de * mu;
        if (kron(mu, id) * kron(id, de) != dm || kron(id, mu) * kron(de, id) != dm)
            r.pass = false;
        rep.laws.push_back(r);
    }
}

} // namespace model_detail

/// Law-by-law report for a model; exhaustive basis checks, exact rationals.
inline ValidationReport validate_model(const FrobeniusModel& m) {
    ValidationReport rep;
    model_detail::check_algebra(m.open_algebra, "A", rep);
    model_detail::check_algebra(m.closed_algebra, "C", rep);
    // naturality of the braiding: swap . (f (x) g) = (g (x) f) . swap
    // for structure maps of each algebra
    {
        LawResult r{"sigma.naturality", true, ""};
        for (Atom at : {Atom::A, Atom::C}) {
            const FrobeniusAlgebra& a = m.algebra(at);
            RatMatrix mu = a.mu_matrix(), de = a.delta_matrix();
            auto swap = [](std::size_t dx, std::size_t dy) {
                RatMatrix s(dx * dy, dx * dy);
                for (std::size_t i = 0; i < dx; ++i)
                    for (std::size_t j = 0; j < dy; ++j)
                        s(j * dx + i, i * dy + j) = Rational(1);
                return s;
            };
            std::size_t d = a.dim;
            // f = mu: d*d -> d, g = delta: d -> d*d
            if (swap(d, d * d) * kron(mu, de) != kron(de, mu) * swap(d * d, d))
                r.pass = false;
            // f = eta: 1 -> d, g = epsilon: d -> 1
            if (swap(d, 1) * kron(a.eta_matrix(), a.epsilon_matrix()) !=
                kron(a.epsilon_matrix(), a.eta_matrix()) * swap(1, d))
                r.pass = false;
        }
        rep.laws.push_back(r);
    }
    return rep;
}

namespace builtin_models {

/// Q[x]/(x^2) with counit eps(1)=0, eps(x)=1.
inline FrobeniusAlgebra dual_numbers() {
    FrobeniusAlgebra a;
    a.dim = 2;
    a.basis = {"1", "x"};
    a.mult.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    a.mult[0][0][0] = Rational(1); // 1*1 = 1
    a.mult[0][1][1] = Rational(1); // 1*x = x
    a.mult[1][0][1] = Rational(1); // x*1 = x
    // x*x = 0
    a.unit = {Rational(1), Rational(0)};
    a.counit = {Rational(0), Rational(1)};
    a.finalize();
    return a;
}

/// Q[x]/(x^2-1) with the same counit.
inline FrobeniusAlgebra lee_algebra() {
    FrobeniusAlgebra a;
    a.dim = 2;
    a.basis = {"1", "x"};
    a.mult.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    a.mult[0][0][0] = Rational(1);
    a.mult[0][1][1] = Rational(1);
    a.mult[1][0][1] = Rational(1);
    a.mult[1][1][0] = Rational(1); // x*x = 1
    a.unit = {Rational(1), Rational(0)};
    a.counit = {Rational(0), Rational(1)};
    a.finalize();
    return a;
}

} // namespace builtin_models

inline FrobeniusModel khovanov_model() {
    FrobeniusAlgebra a = builtin_models::dual_numbers();
    return {"khovanov", a, a};
}

inline FrobeniusModel lee_model() {
    FrobeniusAlgebra a = builtin_models::lee_algebra();
    return {"lee", a, a};
}

/// Looks up a built-in model by name; throws std::invalid_argument.
inline FrobeniusModel builtin_model(const std::string& name) {
    if (name == "khovanov" || name == "K") return khovanov_model();
    if (name == "lee" || name == "L") return lee_model();
    throw std::invalid_argument("unknown model '" + name + "'");
}

} // namespace occ
