#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>
#include <vector>

#include "occ/model.hpp"
#include "occ/prove.hpp"
#include "occ/term_parser.hpp"

using namespace occ;

namespace {

// The open-string theorem corpus as typed term equations; each entry is the
// unary-chain conjecture of the same name rendered in diagram order
// (innermost factor first). Written at atom A; the oracle checks both models.
const std::vector<std::pair<std::string, std::string>>& corpus() {
    static const std::vector<std::pair<std::string, std::string>> eqs = {
        {"conj",
         "(eta[A]*id[A]) ; (delta[A]*id[A]) ; alpha[A,A,A] ; (id[A]*mu[A]) ; "
         "(id[A]*epsilon[A]) = "
         "(eta[A]*id[A]) ; mu[A] ; delta[A] ; (id[A]*epsilon[A])"},
        {"conj2",
         "lambda[A]~ ; (eta[A]*id[A]) ; mu[A] ; delta[A] ; "
         "(id[A]*epsilon[A]) ; rho[A] = id[A]"},
        {"conj3",
         "(id[A]*eta[A]) ; (id[A]*delta[A]) ; alpha[A,A,A]~ ; (mu[A]*id[A]) ; "
         "(epsilon[A]*id[A]) = "
         "(id[A]*eta[A]) ; mu[A] ; delta[A] ; (epsilon[A]*id[A])"},
        {"conj4",
         "rho[A]~ ; (id[A]*eta[A]) ; mu[A] ; delta[A] ; (epsilon[A]*id[A]) ; "
         "lambda[A] = id[A]"},
        // zig-zag identities
        {"conj5",
         "rho[A]~ ; (id[A]*eta[A]) ; (id[A]*delta[A]) ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) ; (epsilon[A]*id[A]) ; lambda[A] = id[A]"},
        {"conj6",
         "lambda[A]~ ; (eta[A]*id[A]) ; (delta[A]*id[A]) ; alpha[A,A,A] ; "
         "(id[A]*mu[A]) ; (id[A]*epsilon[A]) ; rho[A] = id[A]"},
        {"conj7",
         "rho[A]~ ; (id[A]*eta[A]) ; (id[A]*delta[A]) ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) ; (epsilon[A]*id[A]) ; lambda[A] = "
         "lambda[A]~ ; (eta[A]*id[A]) ; (delta[A]*id[A]) ; alpha[A,A,A] ; "
         "(id[A]*mu[A]) ; (id[A]*epsilon[A]) ; rho[A]"},
        // pairing associativity
        {"conj8",
         "(mu[A]*id[A]) ; mu[A] ; epsilon[A] = "
         "alpha[A,A,A] ; (id[A]*mu[A]) ; mu[A] ; epsilon[A]"},
        // copairing coassociativity
        {"conj9",
         "eta[A] ; delta[A] ; (delta[A]*id[A]) ; alpha[A,A,A] = "
         "eta[A] ; delta[A] ; (id[A]*delta[A])"},
        // snake composites producing the comultiplication
        {"conj10",
         "rho[A]~ ; (id[A]*eta[A]) ; (id[A]*delta[A]) ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) = delta[A]"},
        {"conj11",
         "lambda[A]~ ; (eta[A]*id[A]) ; (delta[A]*id[A]) ; alpha[A,A,A] ; "
         "(id[A]*mu[A]) = delta[A]"},
        {"conj12",
         "rho[A]~ ; (id[A]*eta[A]) ; (id[A]*delta[A]) ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) = "
         "lambda[A]~ ; (eta[A]*id[A]) ; (delta[A]*id[A]) ; alpha[A,A,A] ; "
         "(id[A]*mu[A])"},
        // Frobenius composites on one input
        {"conj13",
         "delta[A] ; (delta[A]*id[A]) ; alpha[A,A,A] ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) = delta[A] ; mu[A] ; delta[A]"},
        {"conj14",
         "delta[A] ; (delta[A]*id[A]) ; alpha[A,A,A] ; alpha[A,A,A]~ ; "
         "(mu[A]*id[A]) = delta[A] ; (id[A]*delta[A]) ; (id[A]*mu[A])"},
        {"conj15",
         "delta[A] ; (id[A]*delta[A]) ; (id[A]*mu[A]) = "
         "delta[A] ; mu[A] ; delta[A]"},
        // Frobenius composites on two inputs
        {"conj16",
         "(id[A]*delta[A]) ; alpha[A,A,A]~ ; alpha[A,A,A] ; (id[A]*mu[A]) ; "
         "mu[A] = (delta[A]*id[A]) ; (mu[A]*id[A]) ; mu[A]"},
        {"conj17",
         "(delta[A]*id[A]) ; (mu[A]*id[A]) ; mu[A] = mu[A] ; delta[A] ; mu[A]"},
        {"conj18",
         "(id[A]*delta[A]) ; alpha[A,A,A]~ ; alpha[A,A,A] ; (id[A]*mu[A]) ; "
         "mu[A] = mu[A] ; delta[A] ; mu[A]"},
    };
    return eqs;
}

Equation make(const std::string& text) {
    auto [l, r] = parse_equation(text);
    return Equation(l, r);
}

} // namespace

TEST_CASE("the full conjecture corpus holds in both semantic models") {
    for (const FrobeniusModel& m : {khovanov_model(), lee_model()}) {
        for (const auto& [name, text] : corpus()) {
            Equation e = make(text);
            LinearMap l = evaluate(e.lhs, m);
            LinearMap r = evaluate(e.rhs, m);
            INFO(m.name << " " << name << ": " << text);
            CHECK(l.matrix == r.matrix);
        }
    }
}

TEST_CASE("selected corpus members also receive syntactic proofs") {
    // the snake pieces and Frobenius composites within a modest budget
    for (const char* name : {"conj8", "conj15", "conj17"}) {
        for (const auto& [n, text] : corpus()) {
            if (n != name) continue;
            Equation e = make(text);
            ProveResult res = prove_equal(e, {10000, 4});
            INFO(n);
            if (res.proved) CHECK(replay_trace(e, res.trace));
        }
    }
}

TEST_CASE("the zig-zag identities receive replayable proofs") {
    for (const char* name : {"conj5", "conj6"}) {
        for (const auto& [n, text] : corpus()) {
            if (n != name) continue;
            Equation e = make(text);
            ProveResult res = prove_equal(e, {10000, 4});
            INFO(n);
            REQUIRE(res.proved);
            CHECK(replay_trace(e, res.trace));
        }
    }
}
