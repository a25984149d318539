#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "occ/loop_braid.hpp"

using namespace occ;

namespace {

LoopBraidWord random_word(std::mt19937& rng, std::size_t n, int max_len = 8) {
    std::uniform_int_distribution<int> len(0, max_len), kind(0, 1), pw(0, 1);
    std::uniform_int_distribution<std::size_t> idx(1, n - 1);
    std::vector<LoopBraidWord::Letter> ls;
    int k = len(rng);
    for (int i = 0; i < k; ++i) {
        LoopBraidWord::Letter l{};
        l.kind = kind(rng) ? LoopBraidWord::Kind::Sigma
                           : LoopBraidWord::Kind::Rho;
        l.index = idx(rng);
        l.power = (l.kind == LoopBraidWord::Kind::Sigma && pw(rng)) ? -1 : 1;
        ls.push_back(l);
    }
    return LoopBraidWord(n, std::move(ls));
}

} // namespace

TEST_CASE("the presentation relations hold in the permutation quotient") {
    for (std::size_t n : {3u, 4u, 5u}) {
        RelationReport rep = check_relations(n);
        INFO(rep.str());
        CHECK(rep.all_hold());
        CHECK(!rep.results.empty());
    }
}

TEST_CASE("three-index relations are skipped for two strands") {
    RelationReport rep = check_relations(2);
    CHECK(rep.all_hold());
    bool skipped = false;
    for (const RelationResult& r : rep.results) skipped |= !r.checked;
    CHECK(skipped);
}

TEST_CASE("the permutation representation is a homomorphism") {
    std::mt19937 rng(2718);
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 3 + (i % 4);
        LoopBraidWord a = random_word(rng, n), b = random_word(rng, n);
        Permutation combined = to_permutations(concat_reduce(a, b));
        // a acts first, then b
        Permutation expected = to_permutations(b) * to_permutations(a);
        CHECK(combined == expected);
    }
}

TEST_CASE("free reduction cancels inverse pairs completely") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        LoopBraidWord w = random_word(rng, 4);
        // formal inverse: reversed letters with sigma powers flipped
        std::vector<LoopBraidWord::Letter> inv(w.letters.rbegin(),
                                               w.letters.rend());
        for (auto& l : inv)
            if (l.kind == LoopBraidWord::Kind::Sigma) l.power = -l.power;
        LoopBraidWord winv(4, std::move(inv));
        CHECK(concat_reduce(w, winv).letters.empty());
        CHECK(concat_reduce(winv, w).letters.empty());
    }
}

TEST_CASE("reduction is idempotent and order-preserving") {
    LoopBraidWord w = parse_word("s1 s1^-1 s2 r1 r1 r2", 3);
    LoopBraidWord reduced = concat_reduce(LoopBraidWord(3, {}), w);
    CHECK(reduced.str() == "s2 r2");
    CHECK(concat_reduce(LoopBraidWord(3, {}), reduced) == reduced);
}

TEST_CASE("rho is an involution at the word level") {
    LoopBraidWord r1 = LoopBraidWord::rho(3, 1);
    CHECK(concat_reduce(r1, r1).letters.empty());
    // a rho letter never carries an inverse power
    LoopBraidWord forced(3, {{LoopBraidWord::Kind::Rho, 1, -1}});
    CHECK(forced.letters[0].power == 1);
}

TEST_CASE("words print and parse consistently") {
    for (const char* s : {"e", "s1", "s1^-1 r2", "s2 s2 r1"}) {
        LoopBraidWord w = parse_word(s == std::string("e") ? "" : s, 3);
        CHECK(parse_word(w.letters.empty() ? "" : w.str(), 3) == w);
    }
    CHECK(parse_word("", 3).str() == "e");
}

TEST_CASE("invalid words are rejected") {
    CHECK_THROWS_AS(parse_word("s0", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s1^2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s", 3), std::invalid_argument);
    CHECK_THROWS(concat_reduce(LoopBraidWord::sigma(3, 1),
                               LoopBraidWord::sigma(4, 1)));
}

TEST_CASE("permutation cycle notation") {
    CHECK(Permutation::identity(4).cycles() == "()");
    // s1 acts first: 1 -> 2 -> 3 under the composite
    CHECK(to_permutations(parse_word("s1 s2", 3)).cycles() == "(1 3 2)");
    CHECK(to_permutations(parse_word("r1", 3)).cycles() == "(1 2)");
}
