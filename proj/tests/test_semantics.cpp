#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "occ/model.hpp"
#include "occ/model_io.hpp"
#include "occ/rewrite.hpp"
#include "occ/strict.hpp"
#include "occ/term_parser.hpp"

#include "random_terms.hpp"

using namespace occ;

TEST_CASE("both built-in models satisfy every algebra law") {
    for (const FrobeniusModel& m : {khovanov_model(), lee_model()}) {
        ValidationReport rep = validate_model(m);
        INFO(m.name << "\n" << rep.str());
        CHECK(rep.all_pass());
        CHECK(rep.laws.size() >= 8); // per-law results, not one aggregate
    }
}

TEST_CASE("a degenerate counit is rejected") {
    // epsilon = 0 kills the pairing; the loader refuses the model
    std::string bad = R"({"name":"bad","open":{
        "basis":["1","x"],
        "mult":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
        "unit":["1","0"],"counit":["0","0"]}})";
    CHECK_THROWS_AS(load_model(bad), std::invalid_argument);
}

TEST_CASE("model files round-trip through JSON") {
    for (const FrobeniusModel& m : {khovanov_model(), lee_model()}) {
        FrobeniusModel back = load_model(model_to_json(m));
        CHECK(back.open_algebra.dim == m.open_algebra.dim);
        CHECK(back.open_algebra.mult == m.open_algebra.mult);
        CHECK(back.open_algebra.counit == m.open_algebra.counit);
    }
}

TEST_CASE("fractional structure constants parse exactly") {
    // scaled counit: epsilon(x) = 1/2 breaks no law, only rescales
    std::string half = R"({"name":"half","open":{
        "basis":["1","x"],
        "mult":[[["1","0"],["0","1"]],[["0","1"],["1","0"]]],
        "unit":["1","0"],"counit":["0","1/2"]}})";
    FrobeniusModel m = load_model(half);
    CHECK(m.open_algebra.counit[1] == Rational(1, 2));
}

TEST_CASE("closed surface values match the genus formula") {
    FrobeniusModel K = khovanov_model();
    CHECK(closed_surface_value(K, 0) == Rational(0));
    CHECK(closed_surface_value(K, 1) == Rational(2));
    CHECK(closed_surface_value(K, 2) == Rational(0));
    FrobeniusModel L = lee_model();
    CHECK(closed_surface_value(L, 0) == Rational(0));
    CHECK(closed_surface_value(L, 1) == Rational(2));
}

TEST_CASE("every rewrite rule is model-sound in both models") {
    for (const FrobeniusModel& m : {khovanov_model(), lee_model()}) {
        for (const RewriteRule& r : standard_axioms()) {
            for (Atom atom : {Atom::A, Atom::C}) {
                auto inst = instantiate_rule_at(r, atom);
                if (!inst) continue;
                LinearMap l = evaluate(inst->first, m);
                LinearMap rr = evaluate(inst->second, m);
                INFO(m.name << " " << r.name);
                CHECK(l.matrix == rr.matrix);
            }
        }
    }
}

TEST_CASE("evaluation is monoidal: Par evaluates to the Kronecker product") {
    std::mt19937 rng(99);
    FrobeniusModel m = khovanov_model();
    for (int i = 0; i < 50; ++i) {
        MorphismTerm f = testing::random_term(rng, 3);
        MorphismTerm g = testing::random_term(rng, 3);
        LinearMap lf = evaluate(f, m), lg = evaluate(g, m);
        LinearMap both = evaluate(MorphismTerm::par(f, g), m);
        CHECK(both.matrix == kron(lf.matrix, lg.matrix));
    }
}

TEST_CASE("coherence normalization preserves semantics") {
    std::mt19937 rng(1234);
    for (const FrobeniusModel& m : {khovanov_model(), lee_model()}) {
        for (int i = 0; i < 100; ++i) {
            MorphismTerm t = testing::random_term(rng, 5);
            LinearMap a = evaluate(t, m);
            LinearMap b = evaluate(normalize_coherence(t), m);
            INFO(m.name << " " << t.str());
            CHECK(a.matrix == b.matrix);
        }
    }
}

TEST_CASE("the braiding evaluates to the swap matrix") {
    FrobeniusModel m = khovanov_model();
    LinearMap s = evaluate(parse_term("sigma[A,A]"), m);
    // swap on a 2-dimensional space: e_i (x) e_j -> e_j (x) e_i
    RatMatrix expect(4, 4);
    expect(0, 0) = expect(2, 1) = expect(1, 2) = expect(3, 3) = Rational(1);
    CHECK(s.matrix == expect);
    LinearMap inv = evaluate(parse_term("sigma[A,A] ; sigma[A,A]~"), m);
    RatMatrix id4(4, 4);
    for (int i = 0; i < 4; ++i) id4(i, i) = Rational(1);
    CHECK(inv.matrix == id4);
}
