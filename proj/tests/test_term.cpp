#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "occ/object.hpp"
#include "occ/term.hpp"
#include "occ/term_parser.hpp"

#include "random_terms.hpp"

using namespace occ;

TEST_CASE("object parsing round-trips") {
    for (const char* s : {"A", "C", "I", "A*C", "(A*C)*I", "A*(C*A)",
                          "((A*A)*C)*I"}) {
        ObjectExpr o = parse_object(s);
        CHECK(parse_object(o.str()) == o);
    }
}

TEST_CASE("term parsing round-trips on fixed examples") {
    for (const char* s :
         {"id[A]", "mu[A]", "eta[C]", "delta[A] ; mu[A]",
          "mu[A] * id[C]", "alpha[A,C,A]", "alpha[A,C,A]~", "lambda[A*C]",
          "rho[I]~", "sigma[A,C]", "sigma[A,C]~",
          "(sigma[A,A]*id[A]) ; alpha[A,A,A] ; (id[A]*sigma[A,A])",
          "mu[A] ; epsilon[A]", "epsilon[A] * epsilon[A] ; lambda[I]"}) {
        MorphismTerm t = parse_term(s);
        CHECK(parse_term(t.str()) == t);
    }
}

TEST_CASE("term parsing round-trips on random terms") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        MorphismTerm t = testing::random_term(rng, 5);
        INFO(t.str());
        CHECK(parse_term(t.str()) == t);
    }
}

TEST_CASE("typechecking computes generator signatures") {
    auto ty = [](const char* s) { return typecheck(parse_term(s)); };
    CHECK(ty("mu[A] ; epsilon[A]").dom == parse_object("A*A"));
    CHECK(ty("mu[A] ; epsilon[A]").cod == parse_object("I"));
    CHECK(ty("eta[C] ; delta[C]").dom == parse_object("I"));
    CHECK(ty("eta[C] ; delta[C]").cod == parse_object("C*C"));
    CHECK(ty("alpha[A,C,A]").dom == parse_object("(A*C)*A"));
    CHECK(ty("alpha[A,C,A]").cod == parse_object("A*(C*A)"));
    CHECK(ty("sigma[A,C]").dom == parse_object("A*C"));
    CHECK(ty("sigma[A,C]").cod == parse_object("C*A"));
    CHECK(ty("lambda[A]").dom == parse_object("I*A"));
    CHECK(ty("rho[A]~").cod == parse_object("A*I"));
}

TEST_CASE("ill-typed composition is rejected") {
    CHECK_THROWS(typecheck(parse_term("epsilon[A] ; mu[A]")));
    CHECK_THROWS(typecheck(parse_term("mu[A] ; mu[A]")));
    CHECK_THROWS(typecheck(parse_term("sigma[A,C] ; lambda[A]")));
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS(parse_term(""));
    CHECK_THROWS(parse_term("mu[A] ;"));
    CHECK_THROWS(parse_term("frob[A]"));
    CHECK_THROWS(parse_term("mu[A] * "));
    CHECK_THROWS(parse_term("alpha[A,C]")); // arity
    CHECK_THROWS(parse_object("A**C"));
}

TEST_CASE("random terms are always well-typed by construction") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i)
        CHECK_NOTHROW(typecheck(testing::random_term(rng, 6)));
}
