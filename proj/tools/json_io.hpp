#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "localwitt/suites.hpp"

namespace localwitt::cli {

using nlohmann::json;

inline constexpr const char* schema_version = "1.0.0";
inline constexpr const char* tool_version = "0.1.0";

/// A malformed command-line value; `field` names the flag.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }
inline json to_json(const Rational& x) { return to_string(x); }
inline json to_json(Sign s) { return to_int(s); }

inline json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json to_json(const QuadraticForm& q) {
    return {{"place", q.place().to_string()}, {"coeffs", to_json(q.coeffs())}};
}

inline json to_json(const SymMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.entries()) rows.push_back(to_json(r));
    return {{"n", m.size()}, {"entries", rows}};
}

inline json to_json(const WittInvariants& w) {
    json j{{"rank", w.rank}, {"det_class", w.det_class.representative}, {"hasse", to_int(w.hasse)}};
    if (w.signature) j["signature"] = {w.signature->positive, w.signature->negative};
    return j;
}

inline json to_json(const WeilConstant& g) {
    return {{"value", to_json(g.value)}, {"eighth_root_index", g.eighth_root_index},
            {"stabilized_at", g.stabilized_at}, {"place", g.place.to_string()}, {"convention", g.convention}};
}

inline json to_json(const FunctionalEquationReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"label", row.label},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"ratio", row.excluded ? json(nullptr) : to_json(row.ratio)},
                        {"excluded", row.excluded}});
    return {{"place", r.place.to_string()},
            {"s", to_json(r.chi.s)},
            {"twist", to_string(r.chi.twist)},
            {"rows", rows},
            {"max_deviation", r.max_deviation},
            {"c", to_json(r.c)},
            {"warnings", r.warnings}};
}

inline json to_json(const SuiteReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back(
            {{"name", c.name}, {"input", c.input}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return {{"suite", r.suite},    {"gating", r.gating},   {"seed", r.seed},   {"pass", r.pass()},
            {"passed", r.passed()}, {"failed", r.failed()}, {"cases", cases}, {"notes", r.notes}};
}

// ---------------------------------------------------------------------------
// parsing

inline Rational parse_rational_field(const std::string& field, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError(field, std::string("malformed rational '") + text + "' (" + e.what() + ")");
    }
}

inline Place parse_place_field(const std::string& field, const std::string& text) {
    try {
        return Place::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(field, std::string("malformed place '") + text + "' (" + e.what() + ")");
    }
}

inline Rational rational_from_json(const std::string& field, const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational_field(field, j.get<std::string>());
    throw UsageError(field, "expected an integer or a rational string, got " + j.dump());
}

/// "1,-1,1/49" -> coefficients.
inline std::vector<Rational> parse_rational_list(const std::string& field, const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational_field(field, text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// {"place": "p:7", "coeffs": [1, "-1/2"]}
inline QuadraticForm form_from_json(const std::string& field, const json& j) {
    if (!j.is_object() || !j.contains("place") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw UsageError(field, "expected {\"place\": ..., \"coeffs\": [...]}");
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"]) c.push_back(rational_from_json(field, x));
    return QuadraticForm(parse_place_field(field, j["place"].get<std::string>()), std::move(c));
}

/// "diag:7,7,1/49", a JSON list of rows, or {"n": 3, "entries": [[...]]}.
inline SymMatrix parse_matrix_field(const std::string& field, const std::string& text) {
    if (text.rfind("diag:", 0) == 0) return SymMatrix::diagonal(parse_rational_list(field, text.substr(5)));
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception&) {
        throw UsageError(field, "expected diag:a,b,... or a JSON matrix literal, got '" + text + "'");
    }
    const json rows = j.is_object() ? j.value("entries", json()) : j;
    if (!rows.is_array() || rows.empty()) throw UsageError(field, "matrix entries must be a nonempty list of rows");
    if (j.is_object() && j.contains("n") && j["n"].get<std::size_t>() != rows.size())
        throw UsageError(field, "n does not match the number of rows");
    std::vector<std::vector<Rational>> e;
    for (const auto& row : rows) {
        if (!row.is_array()) throw UsageError(field, "each row must be a list");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(rational_from_json(field, x));
        e.push_back(std::move(r));
    }
    try {
        return SymMatrix(std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(field, ex.what());
    }
}

}  // namespace localwitt::cli
