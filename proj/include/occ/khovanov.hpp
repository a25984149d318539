#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace occ {

/// One bigraded homology state |rk>: homological degree r, filtration
/// degree k, and the rank of the corresponding group.
struct HomologyState {
    long long r = 0;
    long long k = 0;
    long long rank = 0; // >= 0
    std::string label;  // opaque generator description, may be empty
};

/// A named list of homology states; (k, r) pairs unique, ranks nonnegative.
struct RankTable {
    std::string name;
    std::vector<HomologyState> states;

    /// Throws std::invalid_argument on duplicate (k,r) or negative rank.
    void validate() const {
        std::set<std::pair<long long, long long>> seen;
        for (const HomologyState& s : states) {
            if (s.rank < 0)
                throw std::invalid_argument("negative rank at (k=" +
                                            std::to_string(s.k) + ", r=" +
                                            std::to_string(s.r) + ")");
            if (!seen.insert({s.k, s.r}).second)
                throw std::invalid_argument("duplicate state (k=" +
                                            std::to_string(s.k) + ", r=" +
                                            std::to_string(s.r) + ")");
        }
    }
};

/// Laurent polynomial in the commuting indeterminates t and A with integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly2 {
public:
    using Key = std::pair<long long, long long>; // (t exponent, A exponent)

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(long long coeff, long long texp, long long aexp) {
        LaurentPoly2 p;
        if (coeff != 0) p.c_[{texp, aexp}] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, long long>& terms() const { return c_; }

    void add_term(long long coeff, long long texp, long long aexp) {
        if (coeff == 0) return;
        long long& v = c_[{texp, aexp}];
        v += coeff;
        if (v == 0) c_.erase({texp, aexp});
    }

    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r = a;
        for (const auto& [key, coeff] : b.c_) r.add_term(coeff, key.first, key.second);
        return r;
    }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) {
        return !(a == b);
    }

    /// Canonical text: terms ascending by t exponent then A exponent,
    /// `coeff*t^r*A^k` with unit coefficients and exponents elided.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [key, coeff] : c_) {
            long long cc = coeff;
            if (first) {
                if (cc < 0) { s += "-"; cc = -cc; }
            } else {
                s += cc < 0 ? " - " : " + ";
                if (cc < 0) cc = -cc;
            }
            first = false;
            std::vector<std::string> factors;
            if (key.first != 0)
                factors.push_back(key.first == 1 ? "t" : "t^" + std::to_string(key.first));
            if (key.second != 0)
                factors.push_back(key.second == 1 ? "A" : "A^" + std::to_string(key.second));
            if (cc != 1 || factors.empty())
                factors.insert(factors.begin(), std::to_string(cc));
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += '*';
                s += factors[i];
            }
        }
        return s;
    }

private:
    std::map<Key, long long> c_; // keys ordered: ascending t, then A
};

/// The evolution operator acts diagonally: U|rk> = rank * t^r * A^k |rk>.
struct UAction {
    LaurentPoly2 monomial;
    HomologyState state;
};

inline UAction apply_U(const HomologyState& s) {
    return {LaurentPoly2::monomial(s.rank, s.r, s.k), s};
}

/// Filtered Poincare polynomial: sum over states of rank * t^r * A^k.
inline LaurentPoly2 tangle_polynomial(const RankTable& table) {
    table.validate();
    LaurentPoly2 p;
    for (const HomologyState& s : table.states) p.add_term(s.rank, s.r, s.k);
    return p;
}

/// Built-in rank table of the Bar-Natan kind for the (2,2)-tangle example.
inline RankTable bar_natan_table() {
    return {"bar-natan",
            {
                {0, 2, 1, "1⊗y + y⊗y"},
                {0, 4, 1, "1⊗y + y⊗1"},
                {2, 8, 1, "1⊗x⊗1"},
                {2, 12, 1, "1⊗1⊗1"},
            }};
}

/// Built-in rank table of the Khovanov kind for the same tangle.
inline RankTable khovanov_table() {
    return {"khovanov",
            {
                {0, 2, 1, "y⊗y"},
                {0, 4, 1, "1⊗y + y⊗1"},
                {1, 6, 1, "(1⊗y, 1⊗y)"},
                {1, 8, 1, "(1⊗1, 1⊗1)"},
                {2, 8, 1, "y⊗1⊗y"},
                {2, 10, 2, "1⊗1⊗y, y⊗1⊗1"},
                {2, 12, 1, "1⊗1⊗1"},
            }};
}

/// Parses a rank-table file: one `r k rank [label]` per line, `#` comments
/// and blank lines skipped. Throws std::invalid_argument with a line number.
inline RankTable parse_rank_table(const std::string& text,
                                  const std::string& name = "") {
    RankTable table;
    table.name = name;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        HomologyState s;
        if (!(ls >> s.r)) continue; // blank or comment-only line
        if (!(ls >> s.k >> s.rank))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected `r k rank [label]`");
        std::getline(ls, s.label);
        std::size_t start = s.label.find_first_not_of(" \t");
        s.label = start == std::string::npos ? "" : s.label.substr(start);
        table.states.push_back(std::move(s));
    }
    table.validate();
    return table;
}

} // namespace occ
