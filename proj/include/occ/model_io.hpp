#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "occ/model.hpp"

namespace occ {

/// Parses "n", "-n", or "n/d" into an exact rational. JSON integers are
/// accepted as-is; floats are rejected (they are not exact).
inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t slash = s.find('/');
        try {
            std::size_t pos = 0;
            std::int64_t num = std::stoll(s.substr(0, slash), &pos);
            if (pos != (slash == std::string::npos ? s.size() : slash))
                throw std::invalid_argument("");
            if (slash == std::string::npos) return Rational(num);
            std::int64_t den = std::stoll(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1) throw std::invalid_argument("");
            return Rational(num, den);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal '" + s + "'");
        }
    }
    throw std::invalid_argument(
        "rational entries must be integers or \"n/d\" strings, got " + j.dump());
}

namespace model_io_detail {

inline FrobeniusAlgebra algebra_from_json(const nlohmann::json& j,
                                          const std::string& where) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument(where + ": " + msg);
    };
    if (!j.is_object()) fail("expected an object");
    for (const char* key : {"basis", "mult", "unit", "counit"})
        if (!j.contains(key)) fail(std::string("missing key '") + key + "'");

    FrobeniusAlgebra a;
    for (const auto& b : j.at("basis")) {
        if (!b.is_string()) fail("basis entries must be strings");
        a.basis.push_back(b.get<std::string>());
    }
    a.dim = a.basis.size();
    if (a.dim == 0) fail("basis must be nonempty");

    const auto& mult = j.at("mult");
    if (mult.size() != a.dim) fail("mult must have one row per basis element");
    for (const auto& row : mult) {
        if (row.size() != a.dim) fail("mult rows must have dim columns");
        std::vector<std::vector<Rational>> r;
        for (const auto& cell : row) {
            if (cell.size() != a.dim)
                fail("mult entries must be coefficient vectors of length dim");
            std::vector<Rational> c;
            for (const auto& v : cell) c.push_back(rational_from_json(v));
            r.push_back(std::move(c));
        }
        a.mult.push_back(std::move(r));
    }
    if (j.at("unit").size() != a.dim) fail("unit must have length dim");
    for (const auto& v : j.at("unit")) a.unit.push_back(rational_from_json(v));
    if (j.at("counit").size() != a.dim) fail("counit must have length dim");
    for (const auto& v : j.at("counit"))
        a.counit.push_back(rational_from_json(v));

    try {
        a.finalize();
    } catch (const std::domain_error&) {
        fail("pairing form is degenerate (counit does not induce an "
             "invertible pairing)");
    }
    return a;
}

} // namespace model_io_detail

/// Loads a model definition from JSON text:
///   { "name": ..., "open": {algebra}, "closed": {algebra}? }
/// where an algebra is { "basis": [names], "mult": dim x dim array of
/// coefficient vectors, "unit": vector, "counit": vector } with entries as
/// integers or "n/d" strings. "closed" defaults to "open". The loaded model
/// is re-validated against every algebra law and rejected if any fails.
inline FrobeniusModel load_model(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("model file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("open"))
        throw std::invalid_argument("model file: missing 'open' algebra");

    FrobeniusModel m;
    m.name = j.value("name", std::string("custom"));
    m.open_algebra = model_io_detail::algebra_from_json(j.at("open"), "open");
    m.closed_algebra = j.contains("closed")
                           ? model_io_detail::algebra_from_json(j.at("closed"),
                                                                "closed")
                           : m.open_algebra;

    ValidationReport report = validate_model(m);
    if (!report.all_pass())
        throw std::invalid_argument("model '" + m.name +
                                    "' fails validation:\n" + report.str());
    return m;
}

/// Serializes a model back to the JSON format accepted by load_model.
inline std::string model_to_json(const FrobeniusModel& m) {
    auto algebra = [](const FrobeniusAlgebra& a) {
        nlohmann::json j;
        j["basis"] = a.basis;
        nlohmann::json mult = nlohmann::json::array();
        for (std::size_t i = 0; i < a.dim; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t jj = 0; jj < a.dim; ++jj) {
                nlohmann::json cell = nlohmann::json::array();
                for (std::size_t k = 0; k < a.dim; ++k)
                    cell.push_back(a.mult[i][jj][k].str());
                row.push_back(std::move(cell));
            }
            mult.push_back(std::move(row));
        }
        j["mult"] = std::move(mult);
        nlohmann::json unit = nlohmann::json::array(),
                       counit = nlohmann::json::array();
        for (const Rational& r : a.unit) unit.push_back(r.str());
        for (const Rational& r : a.counit) counit.push_back(r.str());
        j["unit"] = std::move(unit);
        j["counit"] = std::move(counit);
        return j;
    };
    nlohmann::json j;
    j["name"] = m.name;
    j["open"] = algebra(m.open_algebra);
    j["closed"] = algebra(m.closed_algebra);
    return j.dump(2);
}

} // namespace occ
