// occ: command-line front end for the open-closed cobordism engine.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "occ/khovanov.hpp"
#include "occ/loop_braid.hpp"
#include "occ/model.hpp"
#include "occ/model_io.hpp"
#include "occ/prove.hpp"
#include "occ/rewrite.hpp"
#include "occ/strict.hpp"
#include "occ/term.hpp"
#include "occ/term_parser.hpp"
#include "occ/tptp.hpp"
#include "occ/tptp_encode.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::string matrix_str(const occ::RatMatrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += "[ ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            s += m(r, c).str();
            s += ' ';
        }
        s += "]\n";
    }
    return s;
}

nlohmann::json matrix_json(const occ::RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

occ::FrobeniusModel resolve_model(const std::string& which) {
    try {
        return occ::builtin_model(which);
    } catch (const std::invalid_argument&) {
        return occ::load_model(read_file(which));
    }
}

/// Named equation presets, `name@obj,obj,...`.
std::optional<occ::Equation> resolve_preset(const std::string& text) {
    std::size_t at = text.find('@');
    if (at == std::string::npos) return std::nullopt;
    std::string name = text.substr(0, at);
    std::vector<std::string> args;
    std::string rest = text.substr(at + 1), tok;
    std::istringstream in(rest);
    while (std::getline(in, tok, ',')) args.push_back(tok);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("preset '" + name + "' expects " +
                                        std::to_string(n) + " object argument" +
                                        (n == 1 ? "" : "s"));
    };
    auto parse_eq = [](const std::string& l, const std::string& r) {
        auto [lhs, rhs] = occ::parse_equation(l + " = " + r);
        return occ::Equation(lhs, rhs);
    };
    if (name == "yang-baxter") {
        need(3);
        const std::string &x = args[0], &y = args[1], &z = args[2];
        std::string lhs = "(sigma[" + x + "," + y + "]*id[" + z + "]) ; alpha[" +
                          y + "," + x + "," + z + "] ; (id[" + y + "]*sigma[" +
                          x + "," + z + "]) ; alpha[" + y + "," + z + "," + x +
                          "]~ ; (sigma[" + y + "," + z + "]*id[" + x +
                          "]) ; alpha[" + z + "," + y + "," + x + "]";
        std::string rhs = "alpha[" + x + "," + y + "," + z + "] ; (id[" + x +
                          "]*sigma[" + y + "," + z + "]) ; alpha[" + x + "," +
                          z + "," + y + "]~ ; (sigma[" + x + "," + z + "]*id[" +
                          y + "]) ; alpha[" + z + "," + x + "," + y +
                          "] ; (id[" + z + "]*sigma[" + x + "," + y + "])";
        return parse_eq(lhs, rhs);
    }
    if (name == "pentagon") {
        need(4);
        const std::string &w = args[0], &x = args[1], &y = args[2], &z = args[3];
        std::string lhs = "alpha[" + w + "*" + x + "," + y + "," + z +
                          "] ; alpha[" + w + "," + x + "," + y + "*" + z + "]";
        std::string rhs = "(alpha[" + w + "," + x + "," + y + "]*id[" + z +
                          "]) ; alpha[" + w + "," + x + "*" + y + "," + z +
                          "] ; (id[" + w + "]*alpha[" + x + "," + y + "," + z +
                          "])";
        return parse_eq(lhs, rhs);
    }
    if (name == "frobenius") {
        need(1);
        const std::string& x = args[0];
        std::string lhs = "mu[" + x + "] ; delta[" + x + "]";
        std::string rhs = "(id[" + x + "]*delta[" + x + "]) ; alpha[" + x +
                          "," + x + "," + x + "]~ ; (mu[" + x + "]*id[" + x +
                          "])";
        return parse_eq(lhs, rhs);
    }
    if (name == "zigzag") {
        need(1);
        const std::string& x = args[0];
        std::string lhs = "rho[" + x + "]~ ; (id[" + x + "]*eta[" + x +
                          "]) ; (id[" + x + "]*delta[" + x + "]) ; alpha[" + x +
                          "," + x + "," + x + "]~ ; (mu[" + x + "]*id[" + x +
                          "]) ; (epsilon[" + x + "]*id[" + x + "]) ; lambda[" +
                          x + "]";
        return parse_eq(lhs, "id[" + x + "]");
    }
    if (name == "braid-inverse") {
        need(2);
        const std::string &x = args[0], &y = args[1];
        return parse_eq("sigma[" + x + "," + y + "] ; sigma[" + x + "," + y + "]~",
                        "id[" + x + "*" + y + "]");
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

occ::Equation resolve_equation(const std::string& text) {
    if (auto preset = resolve_preset(text)) return *preset;
    auto [lhs, rhs] = occ::parse_equation(text);
    return occ::Equation(lhs, rhs);
}

void emit(bool json, const nlohmann::json& j, const std::string& plain) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"open-closed cobordism category engine"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --json after the subcommand name
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // check
    std::string check_term;
    auto* check = app.add_subcommand("check", "typecheck a morphism term");
    check->add_option("term", check_term, "term text")->required();

    // prove
    std::string prove_eq;
    std::size_t budget = 10000;
    std::string trace_out;
    auto* prove = app.add_subcommand("prove", "search for an equational proof");
    prove->add_option("equation", prove_eq, "equation text or preset")->required();
    prove->add_option("--budget", budget, "state budget (default 10000)");
    prove->add_option("--trace-out", trace_out, "write the proof trace here");

    // eval
    std::string eval_term, eval_model = "khovanov";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in a model");
    eval_cmd->add_option("term", eval_term, "term text")->required();
    eval_cmd->add_option("--model", eval_model, "builtin name or JSON file");

    // oracle-eq
    std::string oeq_eq, oeq_model = "khovanov";
    auto* oeq = app.add_subcommand("oracle-eq",
                                   "compare both sides of an equation in a model");
    oeq->add_option("equation", oeq_eq, "equation text or preset")->required();
    oeq->add_option("--model", oeq_model, "builtin name or JSON file");

    // emit-tptp
    std::string tptp_eq, tptp_out, tptp_fixed;
    bool strict_mode = false;
    auto* et = app.add_subcommand("emit-tptp", "encode an equation as a THF problem");
    et->add_option("equation", tptp_eq, "equation text or preset");
    et->add_option("-o,--output", tptp_out, "output .p file (default stdout)");
    et->add_flag("--strict-tptp", strict_mode,
                 "rename $-prefixed user types for downstream provers");
    et->add_option("--problem", tptp_fixed,
                   "emit a fixed problem instead: pentagon, triangle, "
                   "braid-naturality, braid-inverse, hexagon, yang-baxter, "
                   "frobenius, zigzag, corpus");

    // parse-szs
    std::string szs_file;
    auto* szs = app.add_subcommand("parse-szs", "extract prover verdicts");
    szs->add_option("file", szs_file, "prover output file")->required();

    // braid
    std::string braid_word;
    std::size_t strands = 2;
    bool relations = false;
    auto* braid = app.add_subcommand("braid", "reduce a loop-braid word");
    braid->add_option("word", braid_word, "word, e.g. 's1 s2^-1 r1'");
    braid->add_option("-n,--strands", strands, "strand count (default 2)");
    braid->add_flag("--relations", relations,
                    "check the presentation relations for n strands");

    // khovanov
    std::string table_spec = "barnatan";
    auto* kh = app.add_subcommand("khovanov", "filtered tangle polynomial");
    kh->add_option("--table", table_spec, "barnatan | khovanov | rank-table file");

    // dispatch
    std::string disp_eq, disp_config;
    auto* disp = app.add_subcommand(
        "dispatch", "emit a problem, run the configured prover, parse SZS");
    disp->add_option("equation", disp_eq, "equation text or preset")->required();
    disp->add_option("--config", disp_config, "JSON config naming the prover")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            occ::MorphismTerm t = occ::parse_term(check_term);
            occ::TermType ty = occ::typecheck(t);
            nlohmann::json j{{"term", t.str()},
                             {"dom", ty.dom.str()},
                             {"cod", ty.cod.str()}};
            emit(json, j, ty.dom.str() + " -> " + ty.cod.str() + "\n");
            return kOk;
        }
        if (*prove) {
            occ::Equation eq = resolve_equation(prove_eq);
            occ::ProveResult res = occ::prove_equal(eq, {budget, 4});
            nlohmann::json j{{"proved", res.proved},
                             {"states", res.stats.states_explored}};
            if (res.proved) {
                std::string tr = res.trace.serialize();
                j["trace"] = tr;
                if (!trace_out.empty()) write_file(trace_out, tr);
                emit(json, j, "proved in " + std::to_string(res.trace.steps.size()) +
                                  " steps\n" + tr);
                return kOk;
            }
            emit(json, j,
                 "exhausted after " + std::to_string(res.stats.states_explored) +
                     " states\n");
            return kInconclusive;
        }
        if (*eval_cmd) {
            occ::FrobeniusModel m = resolve_model(eval_model);
            occ::LinearMap lm = occ::evaluate(occ::parse_term(eval_term), m);
            nlohmann::json j{{"model", m.name},
                             {"dom", lm.dom.str()},
                             {"cod", lm.cod.str()},
                             {"matrix", matrix_json(lm.matrix)}};
            emit(json, j, lm.dom.str() + " -> " + lm.cod.str() + "\n" +
                              matrix_str(lm.matrix));
            return kOk;
        }
        if (*oeq) {
            occ::FrobeniusModel m = resolve_model(oeq_model);
            occ::Equation eq = resolve_equation(oeq_eq);
            occ::LinearMap l = occ::evaluate(eq.lhs, m);
            occ::LinearMap r = occ::evaluate(eq.rhs, m);
            bool equal = l.matrix == r.matrix;
            nlohmann::json j{{"model", m.name}, {"equal", equal}};
            emit(json, j, equal ? "equal\n" : "NOT equal\n");
            return equal ? kOk : kInconclusive;
        }
        if (*et) {
            occ::tptp::Problem p;
            if (!tptp_fixed.empty()) {
                using namespace occ::tptp;
                if (tptp_fixed == "pentagon") p = pentagon_problem();
                else if (tptp_fixed == "triangle") p = triangle_problem();
                else if (tptp_fixed == "braid-naturality") p = braid_naturality_problem();
                else if (tptp_fixed == "braid-inverse") p = braid_inverse_problem();
                else if (tptp_fixed == "hexagon") p = hexagon_problem();
                else if (tptp_fixed == "yang-baxter") p = yang_baxter_problem();
                else if (tptp_fixed == "frobenius") p = frobenius_problem();
                else if (tptp_fixed == "zigzag") p = zigzag_problem();
                else if (tptp_fixed == "corpus") p = frobenius_corpus_problem();
                else throw std::invalid_argument("unknown problem '" + tptp_fixed + "'");
            } else if (!tptp_eq.empty()) {
                p = occ::tptp::encode_equation(resolve_equation(tptp_eq),
                                               occ::standard_axioms());
            } else {
                throw std::invalid_argument(
                    "emit-tptp needs an equation or --problem");
            }
            if (strict_mode) p = occ::tptp::strict_tptp(p);
            std::string text = occ::tptp::emit(p);
            nlohmann::json j{{"problem", text}};
            if (!tptp_out.empty()) {
                write_file(tptp_out, text);
                emit(json, j, "wrote " + tptp_out + "\n");
            } else {
                emit(json, j, text);
            }
            return kOk;
        }
        if (*szs) {
            std::vector<occ::tptp::SzsResult> results =
                occ::tptp::parse_szs(read_file(szs_file));
            nlohmann::json arr = nlohmann::json::array();
            std::string plain;
            for (const occ::tptp::SzsResult& r : results) {
                nlohmann::json j{{"tag", r.tag},
                                 {"prover", r.prover},
                                 {"status", r.raw_status}};
                if (r.cpu >= 0) j["cpu"] = r.cpu;
                if (r.wc >= 0) j["wc"] = r.wc;
                arr.push_back(std::move(j));
                plain += r.tag + (r.prover.empty() ? "" : " " + r.prover) + " " +
                         r.raw_status + "\n";
            }
            emit(json, arr, plain);
            return kOk;
        }
        if (*braid) {
            if (relations) {
                occ::RelationReport rep = occ::check_relations(strands);
                nlohmann::json arr = nlohmann::json::array();
                for (const occ::RelationResult& r : rep.results)
                    arr.push_back({{"relation", r.relation},
                                   {"checked", r.checked},
                                   {"holds", r.holds}});
                emit(json, {{"n", strands}, {"all_hold", rep.all_hold()},
                            {"relations", arr}},
                     rep.str());
                return rep.all_hold() ? kOk : kInconclusive;
            }
            if (braid_word.empty())
                throw std::invalid_argument("braid needs a word or --relations");
            occ::LoopBraidWord w = occ::parse_word(braid_word, strands);
            occ::LoopBraidWord reduced =
                occ::concat_reduce(occ::LoopBraidWord(strands, {}), w);
            occ::Permutation perm = occ::to_permutations(reduced);
            nlohmann::json j{{"n", strands},
                             {"reduced", reduced.str()},
                             {"permutation", perm.cycles()}};
            emit(json, j,
                 reduced.str() + "\npermutation: " + perm.cycles() + "\n");
            return kOk;
        }
        if (*kh) {
            occ::RankTable table;
            if (table_spec == "barnatan") table = occ::bar_natan_table();
            else if (table_spec == "khovanov") table = occ::khovanov_table();
            else table = occ::parse_rank_table(read_file(table_spec), table_spec);
            occ::LaurentPoly2 p = occ::tangle_polynomial(table);
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [key, coeff] : p.terms())
                terms.push_back({key.first, key.second, coeff});
            nlohmann::json j{{"table", table.name},
                             {"polynomial", p.str()},
                             {"terms", terms}}; // (t-exp, A-exp, coeff)
            emit(json, j, p.str() + "\n");
            return kOk;
        }
        if (*disp) {
            nlohmann::json cfg = nlohmann::json::parse(read_file(disp_config));
            if (!cfg.contains("atp"))
                throw std::invalid_argument("config has no 'atp' key");
            std::string atp = cfg.at("atp").get<std::string>();
            occ::tptp::Problem p = occ::tptp::encode_equation(
                resolve_equation(disp_eq), occ::standard_axioms());
            if (cfg.value("strict_tptp", true)) p = occ::tptp::strict_tptp(p);
            std::string problem_path = "occ_dispatch.p";
            write_file(problem_path, occ::tptp::emit(p));
            std::string cmd = atp + " " + problem_path + " 2>&1";
            FILE* pipe = popen(cmd.c_str(), "r");
            if (!pipe) throw std::runtime_error("cannot run '" + atp + "'");
            std::string output;
            char buf[4096];
            std::size_t got;
            while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
                output.append(buf, got);
            pclose(pipe);
            std::vector<occ::tptp::SzsResult> results =
                occ::tptp::parse_szs(output);
            bool theorem = false;
            nlohmann::json arr = nlohmann::json::array();
            std::string plain;
            for (const occ::tptp::SzsResult& r : results) {
                if (r.status == occ::tptp::SzsStatus::Theorem) theorem = true;
                arr.push_back({{"tag", r.tag}, {"status", r.raw_status}});
                plain += r.tag + " " + r.raw_status + "\n";
            }
            emit(json, {{"problem_file", problem_path}, {"results", arr},
                        {"theorem", theorem}},
                 plain.empty() ? "no verdict recognized\n" : plain);
            return theorem ? kOk : kInconclusive;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
