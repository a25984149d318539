#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occ/term.hpp"

namespace occ {

/// Strictified ("slice") form of a morphism term. Objects become atom lists
/// (unit leaves deleted, association forgotten); the morphism becomes a
/// sequence of slices, each holding exactly one generator box padded with
/// identity wires. Coherence generators (alpha, lambda, rho and inverses)
/// vanish. Canonicalization schedules each box as early and as far left as
/// the interchange law allows, so terms equal up to coherence and
/// interchange share one representative.
namespace strict {

/// A generator box: either a Frobenius generator on one atom, or a braiding
/// between two strictified object words.
struct Box {
    GenKind kind;
    Atom frob_atom = Atom::A;       // Mu/Eta/Delta/Epsilon
    std::vector<Atom> bx, by;       // Sigma/SigmaInv: the two braided words

    std::vector<Atom> dom() const {
        switch (kind) {
            case GenKind::Mu: return {frob_atom, frob_atom};
            case GenKind::Eta: return {};
            case GenKind::Delta: return {frob_atom};
            case GenKind::Epsilon: return {frob_atom};
            case GenKind::Sigma: return concat(bx, by);
            case GenKind::SigmaInv: return concat(by, bx);
            default: throw std::logic_error("coherence box in strict form");
        }
    }
    std::vector<Atom> cod() const {
        switch (kind) {
            case GenKind::Mu: return {frob_atom};
            case GenKind::Eta: return {frob_atom};
            case GenKind::Delta: return {frob_atom, frob_atom};
            case GenKind::Epsilon: return {};
            case GenKind::Sigma: return concat(by, bx);
            case GenKind::SigmaInv: return concat(bx, by);
            default: throw std::logic_error("coherence box in strict form");
        }
    }

    friend bool operator==(const Box& a, const Box& b) {
        if (a.kind != b.kind) return false;
        if (is_frobenius_kind(a.kind)) return a.frob_atom == b.frob_atom;
        return a.bx == b.bx && a.by == b.by;
    }

    std::string str() const {
        std::string s = gen_kind_name(kind);
        if (is_frobenius_kind(kind)) {
            s += '.';
            s += atom_char(frob_atom);
        } else {
            s += '[';
            for (Atom a : bx) s += atom_char(a);
            s += ';';
            for (Atom a : by) s += atom_char(a);
            s += ']';
            if (kind == GenKind::SigmaInv) s += '~';
        }
        return s;
    }

    static std::vector<Atom> concat(const std::vector<Atom>& a,
                                    const std::vector<Atom>& b) {
        std::vector<Atom> r = a;
        r.insert(r.end(), b.begin(), b.end());
        return r;
    }
};

/// One box with identity wires on both sides.
struct Slice {
    std::vector<Atom> left;
    Box box;
    std::vector<Atom> right;

    std::vector<Atom> dom() const {
        std::vector<Atom> d = left;
        std::vector<Atom> bd = box.dom();
        d.insert(d.end(), bd.begin(), bd.end());
        d.insert(d.end(), right.begin(), right.end());
        return d;
    }
    std::vector<Atom> cod() const {
        std::vector<Atom> c = left;
        std::vector<Atom> bc = box.cod();
        c.insert(c.end(), bc.begin(), bc.end());
        c.insert(c.end(), right.begin(), right.end());
        return c;
    }

    std::size_t box_start() const { return left.size(); }

    friend bool operator==(const Slice& a, const Slice& b) {
        return a.left == b.left && a.box == b.box && a.right == b.right;
    }
};

struct StrictMorphism {
    std::vector<Atom> dom;
    std::vector<Slice> slices;

    std::vector<Atom> cod() const {
        return slices.empty() ? dom : slices.back().cod();
    }

    friend bool operator==(const StrictMorphism& a, const StrictMorphism& b) {
        return a.dom == b.dom && a.slices == b.slices;
    }

    std::string key() const {
        std::string s;
        for (Atom a : dom) s += atom_char(a);
        for (const Slice& sl : slices) {
            s += '|';
            s += std::to_string(sl.box_start());
            s += ':';
            s += sl.box.str();
        }
        return s;
    }

    /// Node count of the rebuilt term; used for the search size cap.
    std::size_t term_size() const {
        if (slices.empty()) return dom.empty() ? 1 : 2 * dom.size() - 1;
        std::size_t n = slices.size() - 1; // Seq nodes
        for (const Slice& sl : slices) {
            std::size_t items = sl.left.size() + sl.right.size() + 1;
            n += 2 * items - 1;
        }
        return n;
    }
};

namespace detail {

inline void whisker_right(StrictMorphism& m, const std::vector<Atom>& atoms) {
    for (Slice& s : m.slices)
        s.right.insert(s.right.end(), atoms.begin(), atoms.end());
}
inline void whisker_left(StrictMorphism& m, const std::vector<Atom>& atoms) {
    for (Slice& s : m.slices)
        s.left.insert(s.left.begin(), atoms.begin(), atoms.end());
}

inline StrictMorphism to_strict_impl(const MorphismTerm& t) {
    switch (t.tag()) {
        case MorphismTerm::Tag::Id:
            return {t.id_object().strict_atoms(), {}};
        case MorphismTerm::Tag::Gen: {
            const Generator& g = t.generator();
            std::vector<Atom> d = g.dom().strict_atoms();
            if (is_coherence_kind(g.kind)) return {d, {}};
            if (g.kind == GenKind::Sigma || g.kind == GenKind::SigmaInv) {
                Box b{g.kind, Atom::A, g.params[0].strict_atoms(),
                      g.params[1].strict_atoms()};
                if (b.bx.empty() || b.by.empty()) return {d, {}};
                return {d, {Slice{{}, b, {}}}};
            }
            Box b{g.kind, g.frob_atom, {}, {}};
            return {d, {Slice{{}, b, {}}}};
        }
        case MorphismTerm::Tag::Seq: {
            StrictMorphism f = to_strict_impl(t.before());
            StrictMorphism g = to_strict_impl(t.after());
            f.slices.insert(f.slices.end(), g.slices.begin(), g.slices.end());
            return f;
        }
        case MorphismTerm::Tag::Par: {
            StrictMorphism l = to_strict_impl(t.left());
            StrictMorphism r = to_strict_impl(t.right());
            std::vector<Atom> lcod = l.cod();
            whisker_right(l, r.dom);
            whisker_left(r, lcod);
            std::vector<Atom> dom = l.dom;
            dom.insert(dom.end(), r.dom.begin(), r.dom.end());
            l.dom = std::move(dom);
            l.slices.insert(l.slices.end(), r.slices.begin(), r.slices.end());
            return l;
        }
    }
    throw std::logic_error("unreachable");
}

/// Try to move slice t before slice s (s currently first). Legal when t's
/// box does not consume any output of s's box; offsets shift accordingly.
inline bool swap_adjacent(Slice& s, Slice& t) {
    std::vector<Atom> s_boxdom = s.box.dom();
    std::vector<Atom> s_boxcod = s.box.cod();
    std::vector<Atom> t_boxdom = t.box.dom();
    std::vector<Atom> t_boxcod = t.box.cod();
    std::size_t s_start = s.box_start();
    std::size_t s_end = s_start + s_boxcod.size();
    std::size_t t_start = t.box_start();
    std::size_t t_end = t_start + t_boxdom.size();

    if (t_end <= s_start && t_start < s_start) {
        // t acts inside s.left: pull it in front.
        std::vector<Atom> mid(s.left.begin() + t_end, s.left.end());
        Slice nt{std::vector<Atom>(s.left.begin(), s.left.begin() + t_start),
                 t.box, mid};
        nt.right.insert(nt.right.end(), s_boxdom.begin(), s_boxdom.end());
        nt.right.insert(nt.right.end(), s.right.begin(), s.right.end());
        Slice ns{std::vector<Atom>(s.left.begin(), s.left.begin() + t_start),
                 s.box, s.right};
        ns.left.insert(ns.left.end(), t_boxcod.begin(), t_boxcod.end());
        ns.left.insert(ns.left.end(), mid.begin(), mid.end());
        s = std::move(nt);
        t = std::move(ns);
        return true;
    }
    if (t_start >= s_end) {
        // t acts right of s's box; swap only when that moves it left of s.
        long delta = (long)s_boxcod.size() - (long)s_boxdom.size();
        std::size_t nt_start = (std::size_t)((long)t_start - delta);
        if (nt_start >= s_start) return false;
        std::size_t off = t_start - s_end; // wires between s box cod and t box
        std::vector<Atom> mid(s.right.begin(), s.right.begin() + off);
        Slice nt{s.left, t.box,
                 std::vector<Atom>(s.right.begin() + off + t_boxdom.size(),
                                   s.right.end())};
        nt.left.insert(nt.left.end(), s_boxdom.begin(), s_boxdom.end());
        nt.left.insert(nt.left.end(), mid.begin(), mid.end());
        Slice ns{s.left, s.box, mid};
        ns.right.insert(ns.right.end(), t_boxcod.begin(), t_boxcod.end());
        std::vector<Atom> tail(s.right.begin() + off + t_boxdom.size(),
                               s.right.end());
        ns.right.insert(ns.right.end(), tail.begin(), tail.end());
        s = std::move(nt);
        t = std::move(ns);
        return true;
    }
    return false;
}

/// (term : x -> normal form of x, normal form). The normal form is the
/// right-associated comb of x's atoms with unit leaves deleted.
struct Normalizer {
    MorphismTerm term;
    ObjectExpr obj;
};

inline bool obj_is_unit(const ObjectExpr& x) {
    return x.is_atom() && x.atom_value() == Atom::I;
}

/// merge: L*R -> comb(atoms(L) ++ atoms(R)) for combs L and R.
inline Normalizer merge_combs(const ObjectExpr& L, const ObjectExpr& R) {
    if (obj_is_unit(L)) return {occ::lambda(R), R};
    if (obj_is_unit(R)) return {occ::rho(L), L};
    if (L.is_atom()) // single atom: L*R is already a comb
        return {MorphismTerm::id(tensor(L, R)), tensor(L, R)};
    // L = a * L2: alpha shifts a out, then merge L2*R under id[a]
    ObjectExpr a = L.left(), L2 = L.right();
    Normalizer inner = merge_combs(L2, R);
    MorphismTerm t = occ::alpha(a, L2, R);
    if (!is_identity_term(inner.term))
        t = MorphismTerm::seq(
            MorphismTerm::par(MorphismTerm::id(a), inner.term), t);
    return {t, tensor(a, inner.obj)};
}

inline Normalizer normalize_object(const ObjectExpr& x) {
    if (x.is_atom()) return {MorphismTerm::id(x), x};
    Normalizer l = normalize_object(x.left());
    Normalizer r = normalize_object(x.right());
    Normalizer m = merge_combs(l.obj, r.obj);
    if (is_identity_term(l.term) && is_identity_term(r.term))
        return {m.term, m.obj};
    MorphismTerm pre = MorphismTerm::par(l.term, r.term);
    if (is_identity_term(m.term)) return {pre, m.obj};
    return {MorphismTerm::seq(m.term, pre), m.obj};
}

/// Structural inverse of a pure-coherence term.
inline MorphismTerm invert_coherence(const MorphismTerm& t) {
    switch (t.tag()) {
        case MorphismTerm::Tag::Id: return t;
        case MorphismTerm::Tag::Gen: {
            const Generator& g = t.generator();
            return MorphismTerm::gen(
                Generator::structural(inverse_kind(g.kind), g.params));
        }
        case MorphismTerm::Tag::Seq:
            return MorphismTerm::seq(invert_coherence(t.before()),
                                     invert_coherence(t.after()));
        case MorphismTerm::Tag::Par:
            return MorphismTerm::par(invert_coherence(t.left()),
                                     invert_coherence(t.right()));
    }
    throw std::logic_error("unreachable");
}

/// Canonical coherence isomorphism from -> to for objects with equal strict
/// atom words; the Mac Lane coherence theorem makes the choice immaterial.
inline MorphismTerm coherence_map(const ObjectExpr& from, const ObjectExpr& to) {
    if (from == to) return MorphismTerm::id(from);
    if (from.strict_atoms() != to.strict_atoms())
        throw std::logic_error("coherence_map: atom words differ");
    Normalizer nf = normalize_object(from);
    Normalizer nt = normalize_object(to);
    if (is_identity_term(nt.term)) return nf.term;
    MorphismTerm back = invert_coherence(nt.term);
    if (is_identity_term(nf.term)) return back;
    return MorphismTerm::seq(back, nf.term);
}

} // namespace detail

inline StrictMorphism to_strict(const MorphismTerm& t) {
    typecheck(t); // reject ill-typed input up front
    return detail::to_strict_impl(t);
}

/// Earliest/leftmost scheduling: bubble boxes leftward while the interchange
/// law permits. Deterministic; idempotent.
inline void canonicalize(StrictMorphism& m) {
    bool changed = true;
    std::size_t guard = m.slices.size() * m.slices.size() + 1;
    while (changed && guard-- > 0) {
        changed = false;
        for (std::size_t i = 0; i + 1 < m.slices.size(); ++i)
            if (detail::swap_adjacent(m.slices[i], m.slices[i + 1]))
                changed = true;
    }
}

inline StrictMorphism to_canonical(const MorphismTerm& t) {
    StrictMorphism m = to_strict(t);
    canonicalize(m);
    return m;
}

/// Rebuild a MorphismTerm from slice form: objects right-associated, each
/// slice a right-nested Par of wires and its box, slices Seq-chained.
inline MorphismTerm rebuild(const StrictMorphism& m) {
    auto box_term = [](const Box& b) -> MorphismTerm {
        if (is_frobenius_kind(b.kind))
            return MorphismTerm::gen(Generator::frobenius(b.kind, b.frob_atom));
        return MorphismTerm::gen(Generator::structural(
            b.kind, {ObjectExpr::from_atoms(b.bx), ObjectExpr::from_atoms(b.by)}));
    };
    auto items_term = [](std::vector<MorphismTerm> items) -> MorphismTerm {
        if (items.empty()) return MorphismTerm::id(obj_I());
        MorphismTerm t = items.back();
        for (std::size_t i = items.size() - 1; i-- > 0;)
            t = MorphismTerm::par(items[i], t);
        return t;
    };

    if (m.slices.empty()) {
        if (m.dom.empty()) return MorphismTerm::id(obj_I());
        std::vector<MorphismTerm> wires;
        for (Atom a : m.dom) wires.push_back(MorphismTerm::id(ObjectExpr(a)));
        return items_term(std::move(wires));
    }
    MorphismTerm t;
    bool first = true;
    ObjectExpr cur_cod;
    for (const Slice& s : m.slices) {
        std::vector<MorphismTerm> items;
        for (Atom a : s.left) items.push_back(MorphismTerm::id(ObjectExpr(a)));
        items.push_back(box_term(s.box));
        for (Atom a : s.right) items.push_back(MorphismTerm::id(ObjectExpr(a)));
        MorphismTerm layer = items_term(std::move(items));
        TermType ty = typecheck(layer);
        if (first) {
            t = layer;
        } else {
            // consecutive layers agree on the atom word, not necessarily on
            // its bracketing; bridge with the canonical coherence iso
            if (!(cur_cod == ty.dom))
                t = MorphismTerm::seq(detail::coherence_map(cur_cod, ty.dom), t);
            t = MorphismTerm::seq(layer, t);
        }
        cur_cod = ty.cod;
        first = false;
    }
    return t;
}

} // namespace strict

/// Canonical representative modulo the structural isomorphisms: objects
/// right-associated with unit leaves deleted, alpha/lambda/rho erased, boxes
/// scheduled earliest-leftmost.
inline MorphismTerm normalize_coherence(const MorphismTerm& t) {
    return strict::rebuild(strict::to_canonical(t));
}

} // namespace occ
