#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "occ/prove.hpp"
#include "occ/rewrite.hpp"
#include "occ/strict.hpp"
#include "occ/term_parser.hpp"

#include "random_terms.hpp"

using namespace occ;

namespace {
Equation eq(const std::string& text) {
    auto [l, r] = parse_equation(text);
    return Equation(l, r);
}
} // namespace

TEST_CASE("the standard axiom set covers 17 rule families") {
    std::set<std::string> families;
    for (const RewriteRule& r : standard_axioms()) families.insert(r.family);
    CHECK(families.size() == 17);
    CHECK(families.count("frobenius.assoc") == 1);
    CHECK(families.count("braid.inverse") == 1);
    CHECK(families.count("monoidal.pentagon") == 1);
}

TEST_CASE("every rule instantiation typechecks with matching endpoints") {
    for (const RewriteRule& r : standard_axioms()) {
        for (Atom atom : {Atom::A, Atom::C}) {
            auto inst = instantiate_rule_at(r, atom);
            if (!inst) continue; // morphism-variable rules
            TermType tl = typecheck(inst->first);
            TermType tr = typecheck(inst->second);
            INFO(r.name);
            CHECK(tl.dom == tr.dom);
            CHECK(tl.cod == tr.cod);
        }
    }
}

TEST_CASE("normalize_coherence is idempotent") {
    std::mt19937 rng(123);
    for (int i = 0; i < 200; ++i) {
        MorphismTerm t = testing::random_term(rng, 5);
        MorphismTerm n = normalize_coherence(t);
        INFO(t.str());
        CHECK(normalize_coherence(n) == n);
    }
}

TEST_CASE("coherence erases structural isomorphisms") {
    MorphismTerm a = normalize_coherence(parse_term("alpha[A,A,A]"));
    MorphismTerm idstrict = normalize_coherence(parse_term("id[(A*A)*A]"));
    CHECK(a == idstrict);
    // both pentagon paths collapse to the same normal form
    MorphismTerm p1 = normalize_coherence(
        parse_term("alpha[A*A,A,A] ; alpha[A,A,A*A]"));
    MorphismTerm p2 = normalize_coherence(parse_term(
        "(alpha[A,A,A]*id[A]) ; alpha[A,A*A,A] ; (id[A]*alpha[A,A,A])"));
    CHECK(p1 == p2);
}

TEST_CASE("terms differing by more than coherence stay distinct") {
    MorphismTerm l = normalize_coherence(
        parse_term("(epsilon[A]*id[A]) ; lambda[A]"));
    MorphismTerm r = normalize_coherence(
        parse_term("(id[A]*epsilon[A]) ; rho[A]"));
    CHECK(!(l == r));
}

TEST_CASE("syntactically equal sides prove with an immediate trace") {
    ProveResult res = prove_equal(eq("mu[A] = mu[A]"));
    CHECK(res.proved);
    CHECK(replay_trace(eq("mu[A] = mu[A]"), res.trace));
}

TEST_CASE("the Frobenius relation proves in one rewrite") {
    Equation e = eq(
        "mu[A] ; delta[A] = "
        "(id[A]*delta[A]) ; alpha[A,A,A]~ ; (mu[A]*id[A])");
    ProveResult res = prove_equal(e);
    REQUIRE(res.proved);
    CHECK(replay_trace(e, res.trace));
}

TEST_CASE("braid invertibility proves and replays") {
    Equation e = eq("sigma[A,A] ; sigma[A,A]~ = id[A*A]");
    ProveResult res = prove_equal(e);
    REQUIRE(res.proved);
    CHECK(replay_trace(e, res.trace));
}

TEST_CASE("Yang-Baxter proves within budget and replays deterministically") {
    Equation e = eq(
        "(sigma[A,A]*id[A]) ; alpha[A,A,A] ; (id[A]*sigma[A,A]) ; "
        "alpha[A,A,A]~ ; (sigma[A,A]*id[A]) = "
        "alpha[A,A,A] ; (id[A]*sigma[A,A]) ; alpha[A,A,A]~ ; "
        "(sigma[A,A]*id[A]) ; alpha[A,A,A] ; (id[A]*sigma[A,A]) ; "
        "alpha[A,A,A]~");
    ProveResult a = prove_equal(e, {10000, 4});
    ProveResult b = prove_equal(e, {10000, 4});
    REQUIRE(a.proved);
    CHECK(a.trace.serialize() == b.trace.serialize());
    CHECK(replay_trace(e, a.trace));
    // traces survive serialization
    ProofTrace round = ProofTrace::deserialize(a.trace.serialize());
    CHECK(replay_trace(e, round));
}

TEST_CASE("an unprovable equation exhausts without claiming inequality") {
    // counit of a product vs product of counits: false in the models
    ProveResult res =
        prove_equal(eq("mu[A] ; epsilon[A] = epsilon[A] * epsilon[A] ; lambda[I]"),
                    {300, 4});
    CHECK(!res.proved);
    CHECK(res.stats.states_explored > 0);
}

TEST_CASE("replay rejects traces for the wrong equation") {
    Equation good = eq("sigma[A,A] ; sigma[A,A]~ = id[A*A]");
    ProveResult res = prove_equal(good);
    REQUIRE(res.proved);
    Equation other = eq("sigma[C,C] ; sigma[C,C]~ = id[C*C]");
    CHECK(!replay_trace(other, res.trace));
}
