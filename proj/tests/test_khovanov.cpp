#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "occ/khovanov.hpp"

using namespace occ;

TEST_CASE("built-in tables reproduce the published polynomials") {
    CHECK(tangle_polynomial(bar_natan_table()).str() ==
          "A^2 + A^4 + t^2*A^8 + t^2*A^12");
    CHECK(tangle_polynomial(khovanov_table()).str() ==
          "A^2 + A^4 + t*A^6 + t*A^8 + t^2*A^8 + 2*t^2*A^10 + t^2*A^12");
}

TEST_CASE("built-in tables have the published shapes") {
    RankTable bn = bar_natan_table();
    CHECK(bn.states.size() == 4);
    for (const HomologyState& s : bn.states) CHECK(s.rank == 1);
    CHECK_NOTHROW(bn.validate());

    RankTable kh = khovanov_table();
    bool found = false;
    for (const HomologyState& s : kh.states)
        if (s.k == 10 && s.r == 2) {
            found = true;
            CHECK(s.rank == 2);
            CHECK(s.label == "1⊗1⊗y, y⊗1⊗1");
        }
    CHECK(found);
    CHECK_NOTHROW(kh.validate());
}

TEST_CASE("the evolution operator acts diagonally") {
    UAction a = apply_U({2, 10, 2, ""});
    CHECK(a.monomial == LaurentPoly2::monomial(2, 2, 10));
    CHECK(a.monomial.str() == "2*t^2*A^10");

    UAction b = apply_U({0, 2, 1, ""});
    CHECK(b.monomial.str() == "A^2");

    UAction c = apply_U({0, 0, 0, ""});
    CHECK(c.monomial.is_zero());
}

TEST_CASE("the polynomial equals the sum of the diagonal actions") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> deg(-50, 50), rank(0, 9);
    std::uniform_int_distribution<int> size(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        RankTable t{"random", {}};
        std::set<std::pair<long long, long long>> used;
        int n = size(rng);
        while (static_cast<int>(t.states.size()) < n) {
            HomologyState s{deg(rng), deg(rng), rank(rng), ""};
            if (!used.insert({s.k, s.r}).second) continue;
            t.states.push_back(s);
        }
        LaurentPoly2 total;
        for (const HomologyState& s : t.states) total = total + apply_U(s).monomial;
        CHECK(total == tangle_polynomial(t));
    }
}

TEST_CASE("Laurent arithmetic has ring structure") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> coeff(-5, 5), exp(-6, 6);
    auto random_poly = [&]() {
        LaurentPoly2 p;
        for (int i = 0; i < 4; ++i) p.add_term(coeff(rng), exp(rng), exp(rng));
        return p;
    };
    LaurentPoly2 zero, one = LaurentPoly2::monomial(1, 0, 0);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly2 a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("polynomial printing is canonical") {
    CHECK(LaurentPoly2().str() == "0");
    CHECK(LaurentPoly2::monomial(1, 0, 0).str() == "1");
    CHECK(LaurentPoly2::monomial(-3, 1, -2).str() == "-3*t*A^-2");
    LaurentPoly2 p;
    p.add_term(1, 0, 2);
    p.add_term(-1, 2, 8);
    CHECK(p.str() == "A^2 - t^2*A^8");
}

TEST_CASE("rank tables validate their invariants") {
    RankTable dup{"d", {{0, 2, 1, ""}, {0, 2, 3, ""}}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    RankTable neg{"n", {{0, 2, -1, ""}}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
    CHECK(tangle_polynomial({"empty", {}}).is_zero());
}

TEST_CASE("rank table files parse with labels and comments") {
    RankTable t = parse_rank_table(
        "# tangle data\n"
        "0 2 1 first state\n"
        "\n"
        "2 10 2\n",
        "file");
    REQUIRE(t.states.size() == 2);
    CHECK(t.states[0].label == "first state");
    CHECK(t.states[1].rank == 2);
    CHECK_THROWS_AS(parse_rank_table("0 2\n", ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rank_table("0 2 1\n0 2 5\n", ""),
                    std::invalid_argument);
}
