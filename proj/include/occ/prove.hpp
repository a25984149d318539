#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "occ/rewrite.hpp"
#include "occ/strict.hpp"
#include "occ/term.hpp"
#include "occ/term_parser.hpp"

namespace occ {

/// A well-typed equational claim: lhs and rhs must share dom and cod.
struct Equation {
    MorphismTerm lhs, rhs;

    Equation(MorphismTerm l, MorphismTerm r) : lhs(std::move(l)), rhs(std::move(r)) {
        TermType tl = typecheck(lhs), tr = typecheck(rhs);
        if (!(tl.dom == tr.dom) || !(tl.cod == tr.cod))
            throw TypeMismatch(tl.cod, tr.cod, {});
    }
};

struct ProofStep {
    std::string rule;
    Direction dir = Direction::Forward;
    std::string pos;
    std::string before;
    std::string after;
};

struct ProofTrace {
    std::vector<ProofStep> steps;

    /// Line-oriented serialization: rule, direction, position, result term.
    std::string serialize() const {
        std::string out;
        for (const ProofStep& s : steps) {
            out += s.rule;
            out += '\t';
            out += direction_name(s.dir);
            out += '\t';
            out += s.pos;
            out += '\t';
            out += s.after;
            out += '\n';
        }
        return out;
    }

    static ProofTrace deserialize(const std::string& text) {
        ProofTrace t;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ProofStep s;
            std::size_t p1 = line.find('\t');
            std::size_t p2 = line.find('\t', p1 + 1);
            std::size_t p3 = line.find('\t', p2 + 1);
            if (p1 == std::string::npos || p2 == std::string::npos ||
                p3 == std::string::npos)
                throw std::runtime_error("malformed trace line: " + line);
            s.rule = line.substr(0, p1);
            std::string d = line.substr(p1 + 1, p2 - p1 - 1);
            s.dir = d == "fwd" ? Direction::Forward : Direction::Reverse;
            s.pos = line.substr(p2 + 1, p3 - p2 - 1);
            s.after = line.substr(p3 + 1);
            t.steps.push_back(std::move(s));
        }
        return t;
    }
};

struct ProveBudget {
    std::size_t max_states = 10000;
    std::size_t size_factor = 4;
};

struct SearchStats {
    std::size_t states_explored = 0;
    std::size_t frontier_lhs = 0;
    std::size_t frontier_rhs = 0;
    std::size_t pruned_by_size = 0;
};

struct ProveResult {
    bool proved = false;
    ProofTrace trace;
    SearchStats stats;
};

namespace prove_detail {

using strict::StrictMorphism;

struct GroundRule {
    std::string name;
    StrictMorphism lhs, rhs;
};

/// Rules of standard_axioms() instantiated at each atom and strictified.
/// Coherence-only rules vanish (both sides normalize to the identity).
inline const std::vector<GroundRule>& ground_rules() {
    static const std::vector<GroundRule> rules = [] {
        std::vector<GroundRule> out;
        for (const RewriteRule& r : standard_axioms()) {
            for (Atom atom : {Atom::A, Atom::C}) {
                auto inst = instantiate_rule_at(r, atom);
                if (!inst) continue; // morphism-variable rules: slide moves
                StrictMorphism l = strict::to_canonical(inst->first);
                StrictMorphism rr = strict::to_canonical(inst->second);
                if (l == rr) continue;
                if (l.slices.empty()) std::swap(l, rr); // anchor on the larger side
                bool dup = false;
                for (const GroundRule& g : out)
                    if (g.lhs == l && g.rhs == rr) dup = true;
                if (!dup) out.push_back({r.name, std::move(l), std::move(rr)});
            }
        }
        return out;
    }();
    return rules;
}

struct Move {
    std::string rule;
    Direction dir;
    std::string pos;
    StrictMorphism result;
};

inline std::vector<Atom> subvec(const std::vector<Atom>& v, std::size_t a,
                                std::size_t b) {
    return {v.begin() + a, v.begin() + b};
}
inline void append(std::vector<Atom>& v, const std::vector<Atom>& w) {
    v.insert(v.end(), w.begin(), w.end());
}

/// Match `pat` (a block of slices) inside `m` starting at slice j with the
/// block's wires offset by o; on success return m with the block replaced
/// by `repl`.
inline std::optional<StrictMorphism> apply_block(const StrictMorphism& m,
                                                 std::size_t j,
                                                 std::size_t o,
                                                 const StrictMorphism& pat,
                                                 const StrictMorphism& repl) {
    std::size_t k = pat.slices.size();
    if (j + k > m.slices.size()) return std::nullopt;
    std::vector<Atom> dom0 =
        j == 0 ? m.dom : m.slices[j - 1].cod();
    if (o + pat.dom.size() > dom0.size()) return std::nullopt;
    std::vector<Atom> prefix = subvec(dom0, 0, o);
    std::vector<Atom> suffix = subvec(dom0, o + pat.dom.size(), dom0.size());
    if (subvec(dom0, o, o + pat.dom.size()) != pat.dom) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) {
        const strict::Slice& ps = pat.slices[i];
        const strict::Slice& ms = m.slices[j + i];
        std::vector<Atom> want_left = prefix;
        append(want_left, ps.left);
        std::vector<Atom> want_right = ps.right;
        append(want_right, suffix);
        if (!(ms.box == ps.box) || ms.left != want_left || ms.right != want_right)
            return std::nullopt;
    }
    StrictMorphism out;
    out.dom = m.dom;
    out.slices.assign(m.slices.begin(), m.slices.begin() + j);
    for (const strict::Slice& rs : repl.slices) {
        strict::Slice ns;
        ns.left = prefix;
        append(ns.left, rs.left);
        ns.box = rs.box;
        ns.right = rs.right;
        append(ns.right, suffix);
        out.slices.push_back(std::move(ns));
    }
    out.slices.insert(out.slices.end(), m.slices.begin() + j + k, m.slices.end());
    strict::canonicalize(out);
    return out;
}

/// Naturality of the braiding as slice moves: a box adjacent to a sigma box
/// and supported inside one of its braided blocks slides through it.
/// part: 0 = first dom block, 1 = second dom block (forward, box before
/// sigma); 2 = first cod block, 3 = second cod block (reverse, box after).
inline std::optional<StrictMorphism> apply_slide(const StrictMorphism& m,
                                                 std::size_t i, int part) {
    if (i + 1 >= m.slices.size()) return std::nullopt;
    const strict::Slice* bs;
    const strict::Slice* ss;
    bool forward = part < 2;
    if (forward) {
        bs = &m.slices[i];
        ss = &m.slices[i + 1];
    } else {
        ss = &m.slices[i];
        bs = &m.slices[i + 1];
    }
    const strict::Box& S = ss->box;
    if (S.kind != GenKind::Sigma && S.kind != GenKind::SigmaInv)
        return std::nullopt;
    // dom order of the braiding: D1 then D2; cod order: D2 then D1.
    std::vector<Atom> D1 = S.kind == GenKind::Sigma ? S.bx : S.by;
    std::vector<Atom> D2 = S.kind == GenKind::Sigma ? S.by : S.bx;
    const strict::Box& b = bs->box;
    std::vector<Atom> bdom = b.dom(), bcod = b.cod();
    std::size_t ls = ss->box_start();
    std::size_t lb = bs->box_start();

    auto make_sigma = [&](const std::vector<Atom>& d1,
                          const std::vector<Atom>& d2) -> std::optional<strict::Box> {
        if (d1.empty() || d2.empty()) return std::nullopt;
        strict::Box nb;
        nb.kind = S.kind;
        if (S.kind == GenKind::Sigma) {
            nb.bx = d1;
            nb.by = d2;
        } else {
            nb.by = d1;
            nb.bx = d2;
        }
        return nb;
    };

    StrictMorphism out;
    out.dom = m.dom;
    out.slices.assign(m.slices.begin(), m.slices.begin() + i);

    if (forward) {
        // b produces part of the braiding's input; push it past the braiding.
        std::size_t blk = part == 0 ? 0 : 1;
        std::size_t start = ls + (blk == 0 ? 0 : D1.size());
        std::size_t len = blk == 0 ? D1.size() : D2.size();
        if (lb < start || lb + bcod.size() > start + len) return std::nullopt;
        std::size_t off = lb - start;
        std::vector<Atom>& blkv = blk == 0 ? D1 : D2;
        std::vector<Atom> nblk = subvec(blkv, 0, off);
        append(nblk, bdom);
        append(nblk, subvec(blkv, off + bcod.size(), blkv.size()));
        auto ns = make_sigma(blk == 0 ? nblk : D1, blk == 0 ? D2 : nblk);
        if (!ns) return std::nullopt;
        std::vector<Atom> Ls = subvec(bs->left, 0, ls);
        std::vector<Atom> Rs = ss->right;
        strict::Slice sigma_slice{Ls, *ns, Rs};
        // after the braiding the blocks swap; locate b inside its block
        std::vector<Atom> left = Ls;
        std::vector<Atom> right;
        const std::vector<Atom>& d1n = blk == 0 ? nblk : D1;
        const std::vector<Atom>& d2n = blk == 0 ? D2 : nblk;
        if (blk == 0) {
            append(left, d2n);
            append(left, subvec(d1n, 0, off));
            right = subvec(d1n, off + bdom.size(), d1n.size());
        } else {
            append(left, subvec(d2n, 0, off));
            right = subvec(d2n, off + bdom.size(), d2n.size());
            append(right, d1n);
        }
        append(right, Rs);
        strict::Slice box_slice{left, b, right};
        out.slices.push_back(std::move(sigma_slice));
        out.slices.push_back(std::move(box_slice));
    } else {
        // b consumes part of the braiding's output; pull it before.
        std::size_t blk = part == 2 ? 0 : 1; // cod order: D2 then D1
        const std::vector<Atom>& blkv = blk == 0 ? D2 : D1;
        std::size_t start = ls + (blk == 0 ? 0 : D2.size());
        std::size_t len = blkv.size();
        if (lb < start || lb + bdom.size() > start + len) return std::nullopt;
        std::size_t off = lb - start;
        std::vector<Atom> nblk = subvec(blkv, 0, off);
        append(nblk, bcod);
        append(nblk, subvec(blkv, off + bdom.size(), blkv.size()));
        auto ns = make_sigma(blk == 0 ? D1 : nblk, blk == 0 ? nblk : D2);
        if (!ns) return std::nullopt;
        std::vector<Atom> Ls = ss->left;
        std::vector<Atom> Rs = ss->right;
        std::vector<Atom> left = Ls;
        std::vector<Atom> right;
        if (blk == 0) {
            // b acted on the D2 image; before the braiding D2 sits second
            append(left, D1);
            append(left, subvec(blkv, 0, off));
            right = subvec(blkv, off + bdom.size(), blkv.size());
        } else {
            append(left, subvec(blkv, 0, off));
            right = subvec(blkv, off + bdom.size(), blkv.size());
            append(right, D2);
        }
        append(right, Rs);
        strict::Slice box_slice{left, b, right};
        strict::Slice sigma_slice{Ls, *ns, Rs};
        out.slices.push_back(std::move(box_slice));
        out.slices.push_back(std::move(sigma_slice));
    }
    out.slices.insert(out.slices.end(), m.slices.begin() + i + 2, m.slices.end());
    strict::canonicalize(out);
    return out;
}

inline std::vector<Move> enumerate_moves(const StrictMorphism& m) {
    std::vector<Move> moves;
    const auto& rules = ground_rules();
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        const GroundRule& g = rules[ri];
        for (int d = 0; d < 2; ++d) {
            const StrictMorphism& src = d == 0 ? g.lhs : g.rhs;
            const StrictMorphism& dst = d == 0 ? g.rhs : g.lhs;
            if (src.slices.empty()) continue;
            for (std::size_t j = 0; j + src.slices.size() <= m.slices.size(); ++j) {
                std::vector<Atom> dom0 = j == 0 ? m.dom : m.slices[j - 1].cod();
                for (std::size_t o = 0; o + src.dom.size() <= dom0.size(); ++o) {
                    auto res = apply_block(m, j, o, src, dst);
                    if (res)
                        moves.push_back({g.name,
                                         d == 0 ? Direction::Forward
                                                : Direction::Reverse,
                                         "r" + std::to_string(ri) + "." +
                                             std::to_string(j) + "." +
                                             std::to_string(o),
                                         std::move(*res)});
                }
            }
        }
    }
    for (std::size_t i = 0; i + 1 < m.slices.size(); ++i) {
        for (int part = 0; part < 4; ++part) {
            auto res = apply_slide(m, i, part);
            if (res)
                moves.push_back({"braid.naturality",
                                 part < 2 ? Direction::Forward : Direction::Reverse,
                                 "s" + std::to_string(i) + "." + std::to_string(part),
                                 std::move(*res)});
        }
    }
    return moves;
}

/// Re-applies a recorded move; used by trace replay.
inline std::optional<StrictMorphism> apply_named_move(const StrictMorphism& m,
                                                      const std::string& rule,
                                                      Direction dir,
                                                      const std::string& pos) {
    for (Move& mv : enumerate_moves(m))
        if (mv.rule == rule && mv.dir == dir && mv.pos == pos)
            return std::move(mv.result);
    return std::nullopt;
}

} // namespace prove_detail

/// Bounded deterministic bidirectional breadth-first proof search over the
/// strictified rewrite closure of both sides. Never claims inequality: an
/// exhausted budget only returns frontier statistics.
inline ProveResult prove_equal(const Equation& eq, const ProveBudget& budget = {}) {
    using prove_detail::Move;
    using strict::StrictMorphism;

    ProveResult result;
    StrictMorphism l0 = strict::to_canonical(eq.lhs);
    StrictMorphism r0 = strict::to_canonical(eq.rhs);
    std::size_t size_cap =
        budget.size_factor * std::max(eq.lhs.size(), eq.rhs.size());

    struct NodeInfo {
        std::string parent; // empty for roots
        std::string rule;
        Direction dir = Direction::Forward;
        std::string pos;
        StrictMorphism state;
    };
    std::map<std::string, NodeInfo> visited[2]; // 0 = from lhs, 1 = from rhs
    std::deque<std::string> queue[2];

    std::string lkey = l0.key(), rkey = r0.key();
    visited[0][lkey] = {"", "", Direction::Forward, "", l0};
    visited[1][rkey] = {"", "", Direction::Forward, "", r0};
    queue[0].push_back(lkey);
    queue[1].push_back(rkey);

    auto emit_coherence_pre = [&](ProofTrace& t) {
        MorphismTerm norm = strict::rebuild(l0);
        if (!(norm == eq.lhs))
            t.steps.push_back({"coherence", Direction::Forward, "-",
                               eq.lhs.str(), norm.str()});
    };
    auto emit_coherence_post = [&](ProofTrace& t) {
        MorphismTerm norm = strict::rebuild(r0);
        if (!(norm == eq.rhs))
            t.steps.push_back({"coherence", Direction::Reverse, "-",
                               norm.str(), eq.rhs.str()});
    };

    auto build_trace = [&](const std::string& meet) {
        ProofTrace t;
        emit_coherence_pre(t);
        // lhs-side path, root to meet
        std::vector<const NodeInfo*> chain;
        for (std::string k = meet; !k.empty();) {
            const NodeInfo& n = visited[0].at(k);
            if (n.parent.empty()) break;
            chain.push_back(&n);
            k = n.parent;
        }
        std::reverse(chain.begin(), chain.end());
        for (const NodeInfo* n : chain) {
            const NodeInfo& p = visited[0].at(n->parent);
            t.steps.push_back({n->rule, n->dir, n->pos,
                               strict::rebuild(p.state).str(),
                               strict::rebuild(n->state).str()});
        }
        // rhs-side path, meet to root, each step inverted
        for (std::string k = meet;;) {
            const NodeInfo& n = visited[1].at(k);
            if (n.parent.empty()) break;
            const NodeInfo& p = visited[1].at(n.parent);
            // invert: find the move taking n.state back to p.state
            bool found = false;
            for (Move& mv : prove_detail::enumerate_moves(n.state)) {
                if (mv.result.key() == n.parent) {
                    t.steps.push_back({mv.rule, mv.dir, mv.pos,
                                       strict::rebuild(n.state).str(),
                                       strict::rebuild(p.state).str()});
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::logic_error("non-invertible move in trace reconstruction");
            k = n.parent;
        }
        emit_coherence_post(t);
        return t;
    };

    if (lkey == rkey) {
        result.proved = true;
        ProofTrace t;
        emit_coherence_pre(t);
        emit_coherence_post(t);
        result.trace = std::move(t);
        return result;
    }

    std::size_t states = 2;
    int side = 0;
    while ((!queue[0].empty() || !queue[1].empty()) &&
           states < budget.max_states) {
        if (queue[side].empty()) side = 1 - side;
        std::string cur = queue[side].front();
        queue[side].pop_front();
        StrictMorphism state = visited[side].at(cur).state;
        ++result.stats.states_explored;
        for (Move& mv : prove_detail::enumerate_moves(state)) {
            if (mv.result.term_size() > size_cap) {
                ++result.stats.pruned_by_size;
                continue;
            }
            std::string key = mv.result.key();
            if (visited[side].count(key)) continue;
            visited[side][key] = {cur, mv.rule, mv.dir, mv.pos, mv.result};
            ++states;
            if (visited[1 - side].count(key)) {
                result.proved = true;
                result.trace = build_trace(key);
                result.stats.frontier_lhs = visited[0].size();
                result.stats.frontier_rhs = visited[1].size();
                return result;
            }
            queue[side].push_back(key);
            if (states >= budget.max_states) break;
        }
        side = 1 - side;
    }
    result.stats.frontier_lhs = visited[0].size();
    result.stats.frontier_rhs = visited[1].size();
    return result;
}

/// Replays a trace from eq.lhs, verifying every step, and checks that it
/// lands exactly on eq.rhs.
inline bool replay_trace(const Equation& eq, const ProofTrace& trace,
                         std::string* error = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    MorphismTerm cur = eq.lhs;
    for (const ProofStep& s : trace.steps) {
        MorphismTerm after = parse_term(s.after);
        if (s.rule == "coherence") {
            if (s.dir == Direction::Forward) {
                if (!(normalize_coherence(cur) == after))
                    return fail("coherence step does not normalize as recorded");
            } else {
                if (!(normalize_coherence(after) == cur))
                    return fail("closing coherence step mismatch");
            }
            cur = after;
            continue;
        }
        strict::StrictMorphism st = strict::to_canonical(cur);
        auto next = prove_detail::apply_named_move(st, s.rule, s.dir, s.pos);
        if (!next) return fail("step not derivable: " + s.rule + " at " + s.pos);
        MorphismTerm got = strict::rebuild(*next);
        if (!(got == after))
            return fail("step result differs from recorded term");
        cur = after;
    }
    if (!(cur == eq.rhs)) return fail("trace does not terminate at rhs");
    return true;
}

} // namespace occ
