#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "occ/prove.hpp"
#include "occ/rewrite.hpp"
#include "occ/term_parser.hpp"
#include "occ/tptp.hpp"
#include "occ/tptp_encode.hpp"

#ifndef OCC_GOLDEN_DIR
#define OCC_GOLDEN_DIR "tests/golden"
#endif

using namespace occ;
using namespace occ::tptp;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Whitespace-normalized comparison form: comment lines dropped, runs of
/// whitespace (including line breaks inside formulas) collapsed to one space.
std::string normalized(const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '%') continue;
        for (char c : line) {
            if (c == ' ' || c == '\t') {
                if (!out.empty() && out.back() != ' ') out += ' ';
            } else {
                out += c;
            }
        }
        if (!out.empty() && out.back() != ' ') out += ' ';
    }
    return out;
}

Equation make(const std::string& text) {
    auto [l, r] = parse_equation(text);
    return Equation(l, r);
}

} // namespace

TEST_CASE("emitted problems match the transcribed golden files") {
    const std::pair<const char*, Problem> cases[] = {
        {"pentagon", pentagon_problem()},
        {"triangle", triangle_problem()},
        {"braid_naturality", braid_naturality_problem()},
        {"braid_inverse", braid_inverse_problem()},
        {"hexagon", hexagon_problem()},
        {"yang_baxter", yang_baxter_problem()},
        {"frobenius", frobenius_problem()},
        {"zigzag", zigzag_problem()},
        {"frobenius_corpus", frobenius_corpus_problem()},
    };
    for (const auto& [name, p] : cases) {
        std::string golden =
            read_file(std::string(OCC_GOLDEN_DIR) + "/" + name + ".p");
        INFO(name);
        CHECK(normalized(emit(p)) == normalized(golden));
    }
}

TEST_CASE("parse after emit is the identity on the fixed problems") {
    for (const Problem& p :
         {pentagon_problem(), triangle_problem(), braid_naturality_problem(),
          braid_inverse_problem(), hexagon_problem(), yang_baxter_problem(),
          frobenius_problem(), zigzag_problem(), frobenius_corpus_problem()}) {
        CHECK(parse(emit(p)) == p);
    }
}

TEST_CASE("parse after emit is the identity on every encodable axiom") {
    for (const RewriteRule& r : standard_axioms()) {
        auto inst = instantiate_rule_at(r, Atom::A);
        if (!inst) continue;
        Equation e(inst->first, inst->second);
        Problem p;
        try {
            p = encode_equation(e, standard_axioms());
        } catch (const Unencodable&) {
            continue; // outside the finite type map, by design
        }
        INFO(r.name);
        CHECK(parse(emit(p)) == p);
        // determinism: byte-identical across runs
        CHECK(emit(encode_equation(e, standard_axioms())) == emit(p));
    }
}

TEST_CASE("braided equations use the braided encoding") {
    Problem p = encode_equation(
        make("sigma[A,A] ; sigma[A,A]~ = id[A*A]"), standard_axioms());
    std::string text = emit(p);
    CHECK(text.find("braid") != std::string::npos);
    CHECK(text.find("multo") != std::string::npos);
    CHECK(parse(text) == p);
}

TEST_CASE("strict mode renames the dollar-prefixed user types") {
    Problem p = encode_equation(
        make("mu[A] ; delta[A] = "
             "(id[A]*delta[A]) ; alpha[A,A,A]~ ; (mu[A]*id[A])"),
        standard_axioms());
    std::string text = emit(strict_tptp(p));
    CHECK(text.find("$a") == std::string::npos);
    CHECK(text.find("$tType") != std::string::npos); // declarations added
    CHECK_NOTHROW(parse(text).validate());
}

TEST_CASE("objects outside the encoding's type map are rejected") {
    CHECK_THROWS_AS(
        encode_equation(make("mu[A] * id[C] = mu[A] * id[C]"),
                        standard_axioms()),
        Unencodable);
}

TEST_CASE("problem validation catches bad inputs") {
    CHECK_THROWS(parse("thf(a,type,(f: t)).\nthf(a,type,(g: t)).").validate());
    CHECK_THROWS(parse("thf(use,axiom,(! [X: t]: ( (f @ X) = X ))).").validate());
    CHECK_THROWS_AS(parse("thf(broken,type,(f: )."), occ::tptp::ParseError);
    CHECK_THROWS_AS(parse("nonsense"), occ::tptp::ParseError);
}

TEST_CASE("SZS verdict lines parse exactly as published") {
    auto rs = parse_szs(
        "% RESULT: SOT_19PD5B - LEO-II---1.6.2 says Theorem - CPU = 0.01 WC = "
        "0.04");
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].tag == "SOT_19PD5B");
    CHECK(rs[0].prover == "LEO-II---1.6.2");
    CHECK(rs[0].status == SzsStatus::Theorem);
    CHECK(rs[0].cpu == 0.01);
    CHECK(rs[0].wc == 0.04);

    auto rs2 = parse_szs(
        "% SZS status Theorem for /tmp/SystemOnTPTPFormReply39420/SOT_ZN9MIY :");
    REQUIRE(rs2.size() == 1);
    CHECK(rs2[0].tag == "SOT_ZN9MIY");
    CHECK(rs2[0].status == SzsStatus::Theorem);

    // the no-percent variant also appears in the wild
    auto rs3 = parse_szs(
        "RESULT: SOT_Ft33gx - Satallax---3.4 says Theorem - CPU = 0.1 WC = 0.2");
    REQUIRE(rs3.size() == 1);
    CHECK(rs3[0].status == SzsStatus::Theorem);

    CHECK(parse_szs("").empty());
    CHECK(parse_szs("random chatter\nmore noise\n").empty());

    auto multi = parse_szs(
        "% RESULT: SOT_a - P---1 says Theorem - CPU = 0.1 WC = 0.2\n"
        "noise\n"
        "% RESULT: SOT_b - P---1 says CounterSatisfiable - CPU = 1 WC = 2\n");
    REQUIRE(multi.size() == 2);
    CHECK(multi[1].status == SzsStatus::CounterSatisfiable);
}
