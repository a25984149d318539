#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace occ {

struct StrandMismatch : std::invalid_argument {
    StrandMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("strand counts differ: " + std::to_string(a) +
                                " vs " + std::to_string(b)) {}
};

/// A word in the loop braid group on n strands. Generators: sigma_i (strand
/// crossing) and rho_i (loop permutation), i in 1..n-1. rho_i is an
/// involution, so rho letters always carry power +1.
struct LoopBraidWord {
    enum class Kind : unsigned char { Sigma, Rho };
    struct Letter {
        Kind kind;
        std::size_t index; // 1-based
        int power;         // +1 or -1; always +1 for Rho

        friend bool operator==(const Letter& a, const Letter& b) {
            return a.kind == b.kind && a.index == b.index && a.power == b.power;
        }
    };

    std::size_t n = 2;
    std::vector<Letter> letters;

    LoopBraidWord() = default;
    LoopBraidWord(std::size_t strands, std::vector<Letter> ls)
        : n(strands), letters(std::move(ls)) {
        if (n < 1) throw std::invalid_argument("strand count must be >= 1");
        for (Letter& l : letters) {
            if (l.index < 1 || l.index >= n)
                throw std::invalid_argument("generator index " +
                                            std::to_string(l.index) +
                                            " out of range for n=" +
                                            std::to_string(n));
            if (l.power != 1 && l.power != -1)
                throw std::invalid_argument("letter power must be +1 or -1");
            if (l.kind == Kind::Rho) l.power = 1; // involution
        }
    }

    static LoopBraidWord sigma(std::size_t n, std::size_t i, int power = 1) {
        return LoopBraidWord(n, {{Kind::Sigma, i, power}});
    }
    static LoopBraidWord rho(std::size_t n, std::size_t i) {
        return LoopBraidWord(n, {{Kind::Rho, i, 1}});
    }

    friend bool operator==(const LoopBraidWord& a, const LoopBraidWord& b) {
        return a.n == b.n && a.letters == b.letters;
    }

    std::string str() const {
        if (letters.empty()) return "e";
        std::string s;
        for (const Letter& l : letters) {
            if (!s.empty()) s += ' ';
            s += l.kind == Kind::Sigma ? 's' : 'r';
            s += std::to_string(l.index);
            if (l.power == -1) s += "^-1";
        }
        return s;
    }
};

namespace loop_braid_detail {

/// Adjacent letters cancel when they are mutually inverse sigmas or equal
/// rhos. One left-to-right pass with a stack reaches the unique normal form.
inline bool cancels(const LoopBraidWord::Letter& a,
                    const LoopBraidWord::Letter& b) {
    if (a.kind != b.kind || a.index != b.index) return false;
    if (a.kind == LoopBraidWord::Kind::Rho) return true;
    return a.power == -b.power;
}

inline std::vector<LoopBraidWord::Letter> reduce(
    const std::vector<LoopBraidWord::Letter>& in) {
    std::vector<LoopBraidWord::Letter> out;
    for (const LoopBraidWord::Letter& l : in) {
        if (!out.empty() && cancels(out.back(), l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace loop_braid_detail

/// Concatenation followed by free reduction.
inline LoopBraidWord concat_reduce(const LoopBraidWord& w1,
                                   const LoopBraidWord& w2) {
    if (w1.n != w2.n) throw StrandMismatch(w1.n, w2.n);
    std::vector<LoopBraidWord::Letter> all = w1.letters;
    all.insert(all.end(), w2.letters.begin(), w2.letters.end());
    return LoopBraidWord(w1.n, loop_braid_detail::reduce(all));
}

/// A permutation of {1..n}, stored 0-based.
struct Permutation {
    std::vector<std::size_t> map; // map[i] = image of i

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.map.resize(n);
        std::iota(p.map.begin(), p.map.end(), 0);
        return p;
    }
    static Permutation transposition(std::size_t n, std::size_t i) {
        Permutation p = identity(n);
        std::swap(p.map[i - 1], p.map[i]);
        return p;
    }

    /// (a * b)(x) = a(b(x)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation p;
        p.map.resize(b.map.size());
        for (std::size_t i = 0; i < b.map.size(); ++i) p.map[i] = a.map[b.map[i]];
        return p;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.map == b.map;
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < map.size(); ++i)
            if (map[i] != i) return false;
        return true;
    }

    /// Cycle notation on 1-based points; identity prints as "()".
    std::string cycles() const {
        std::string s;
        std::vector<bool> seen(map.size(), false);
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (seen[i] || map[i] == i) continue;
            s += '(';
            std::size_t j = i;
            bool first = true;
            do {
                if (!first) s += ' ';
                s += std::to_string(j + 1);
                seen[j] = true;
                j = map[j];
                first = false;
            } while (j != i);
            s += ')';
        }
        return s.empty() ? "()" : s;
    }
};

/// Image under the symmetric-group quotient sending both sigma_i and rho_i
/// to the transposition (i, i+1). Not faithful; used as a relation checker.
inline Permutation to_permutations(const LoopBraidWord& w) {
    Permutation p = Permutation::identity(w.n);
    // letters act left to right: the word s1 s2 means s1 first
    for (const LoopBraidWord::Letter& l : w.letters)
        p = Permutation::transposition(w.n, l.index) * p;
    return p;
}

struct RelationResult {
    std::string relation;
    bool checked = false; // false when skipped for small n
    bool holds = false;
    std::string note;
};

struct RelationReport {
    std::vector<RelationResult> results;
    bool all_hold() const {
        for (const RelationResult& r : results)
            if (r.checked && !r.holds) return false;
        return true;
    }
    std::string str() const {
        std::string s;
        for (const RelationResult& r : results) {
            s += r.relation;
            s += r.checked ? (r.holds ? ": holds" : ": FAILS") : ": skipped";
            if (!r.note.empty()) s += " (" + r.note + ")";
            s += '\n';
        }
        return s;
    }
};

/// Verifies the loop-braid presentation in the permutation representation:
/// braid relations for sigma, symmetric-group relations for rho, the mixed
/// relations, and commutation for distant indices.
inline RelationReport check_relations(std::size_t n) {
    using W = LoopBraidWord;
    RelationReport rep;
    auto word = [n](std::vector<W::Letter> ls) { return W(n, std::move(ls)); };
    auto eq_perm = [](const W& a, const W& b) {
        return to_permutations(a) == to_permutations(b);
    };
    auto add = [&](const std::string& name, bool holds) {
        rep.results.push_back({name, true, holds, ""});
    };
    auto skip = [&](const std::string& name, const std::string& why) {
        rep.results.push_back({name, false, false, why});
    };

    constexpr auto S = W::Kind::Sigma;
    constexpr auto R = W::Kind::Rho;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        std::string si = std::to_string(i);
        add("rho" + si + "^2 = 1",
            to_permutations(word({{R, i, 1}, {R, i, 1}})).is_identity());
        add("sigma" + si + " invertible",
            to_permutations(word({{S, i, 1}, {S, i, -1}})).is_identity());
    }
    if (n < 3) {
        skip("three-index relations", "require n >= 3");
        return rep;
    }
    for (std::size_t i = 1; i + 2 < n; ++i) {
        std::string si = std::to_string(i), sj = std::to_string(i + 1);
        // braid relation for sigma
        add("sigma" + si + " sigma" + sj + " sigma" + si + " = sigma" + sj +
                " sigma" + si + " sigma" + sj,
            eq_perm(word({{S, i, 1}, {S, i + 1, 1}, {S, i, 1}}),
                    word({{S, i + 1, 1}, {S, i, 1}, {S, i + 1, 1}})));
        // braid relation for rho (symmetric group)
        add("rho" + si + " rho" + sj + " rho" + si + " = rho" + sj + " rho" +
                si + " rho" + sj,
            eq_perm(word({{R, i, 1}, {R, i + 1, 1}, {R, i, 1}}),
                    word({{R, i + 1, 1}, {R, i, 1}, {R, i + 1, 1}})));
        // mixed relations
        add("rho" + si + " rho" + sj + " sigma" + si + " = sigma" + sj +
                " rho" + si + " rho" + sj,
            eq_perm(word({{R, i, 1}, {R, i + 1, 1}, {S, i, 1}}),
                    word({{S, i + 1, 1}, {R, i, 1}, {R, i + 1, 1}})));
        add("sigma" + si + " sigma" + sj + " rho" + si + " = rho" + sj +
                " sigma" + si + " sigma" + sj,
            eq_perm(word({{S, i, 1}, {S, i + 1, 1}, {R, i, 1}}),
                    word({{R, i + 1, 1}, {S, i, 1}, {S, i + 1, 1}})));
    }
    // distant commutation for every generator pair with |i - j| >= 2
    for (std::size_t i = 1; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 <= n; ++j) {
            if (j >= n) break;
            for (auto [ka, na] : {std::pair{S, "sigma"}, std::pair{R, "rho"}})
                for (auto [kb, nb] : {std::pair{S, "sigma"}, std::pair{R, "rho"}})
                    add(std::string(na) + std::to_string(i) + " " + nb +
                            std::to_string(j) + " commute",
                        eq_perm(word({{ka, i, 1}, {kb, j, 1}}),
                                word({{kb, j, 1}, {ka, i, 1}})));
        }
    return rep;
}

/// Parses `s1 s2^-1 r3` word syntax. Throws std::invalid_argument.
inline LoopBraidWord parse_word(const std::string& text, std::size_t n) {
    std::istringstream in(text);
    std::vector<LoopBraidWord::Letter> letters;
    std::string tok;
    while (in >> tok) {
        LoopBraidWord::Letter l{};
        if (tok[0] == 's')
            l.kind = LoopBraidWord::Kind::Sigma;
        else if (tok[0] == 'r')
            l.kind = LoopBraidWord::Kind::Rho;
        else
            throw std::invalid_argument("bad token '" + tok +
                                        "': expected s<i> or r<i>");
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos
                                            ? std::string::npos
                                            : caret - 1);
        l.power = 1;
        if (caret != std::string::npos) {
            std::string pw = tok.substr(caret + 1);
            if (pw == "-1")
                l.power = -1;
            else if (pw != "1")
                throw std::invalid_argument("bad power in '" + tok + "'");
        }
        try {
            std::size_t pos = 0;
            l.index = std::stoul(idx, &pos);
            if (pos != idx.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index in '" + tok + "'");
        }
        letters.push_back(l);
    }
    return LoopBraidWord(n, std::move(letters));
}

} // namespace occ
