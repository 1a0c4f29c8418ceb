// localwitt: command-line front end. Prints one JSON document on stdout.
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "localwitt/suites.hpp"

using namespace localwitt;
using namespace localwitt::cli;

namespace {

struct Result {
    json body;
    bool verified = true;
};

json envelope(const std::string& command, json body) {
    json j{{"schema_version", schema_version}, {"tool_version", tool_version}, {"command", command}};
    j.update(body);
    return j;
}

QuadraticForm read_form(const std::string& field, const std::string& place_text, const std::string& coeffs,
                        const std::string& in_path) {
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw UsageError("--in", "cannot open '" + in_path + "'");
        json j;
        try {
            j = json::parse(f);
        } catch (const std::exception& e) {
            throw UsageError("--in", std::string("invalid JSON: ") + e.what());
        }
        return form_from_json("--in", j);
    }
    return QuadraticForm(parse_place_field("--place", place_text), parse_rational_list(field, coeffs));
}

Complex parse_s(const std::string& re, double im) {
    try {
        std::size_t used = 0;
        double v = std::stod(re, &used);
        if (used != re.size()) throw std::invalid_argument("trailing characters");
        return {v, im};
    } catch (const std::exception&) {
        throw UsageError("--s", "malformed number '" + re + "'");
    }
}

Rational parse_twist(const std::string& text, const Place& place) {
    if (text == "1") return 1;
    if (place.is_real()) {
        if (text == "u" || text == "-1") return -1;
        return parse_rational_field("--twist", text);
    }
    const std::int64_t p = place.prime();
    const std::int64_t u = p == 2 ? 5 : localwitt::detail::least_nonresidue(p);
    if (text == "u") return u;
    if (text == "p") return p;
    if (text == "up") return u * p;
    return parse_rational_field("--twist", text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local invariants of quadratic forms, Weil constants and local functional equations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::string place_text = "real", a_text, b_text, x_text, form_text, form2_text, in_path, center_text, f_text,
                matrix_a, matrix_b, twist_text = "1", s_text = "-0.5", mc_s_text = "0.5", suite = "all", out_path;
    int m = 0, m_min = 1, m_max = 3, n = 3, sign = 1, level = 0;
    double s_imag = 0.0;
    std::uint64_t seed = SuiteOptions{}.seed, samples = 1'000'000;
    std::int64_t p = 3;
    std::optional<std::int64_t> p_opt;
    std::optional<int> n_opt;
    std::string d_text = "1";
    bool timing = false;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a,b) at a place");
    hilbert->add_option("--place", place_text)->required();
    hilbert->add_option("--a", a_text)->required();
    hilbert->add_option("--b", b_text)->required();
    hilbert->add_flag("--oracle", "also evaluate the solvability oracle");

    auto* sqclass = app.add_subcommand("square-class", "square class representative and valuation");
    sqclass->add_option("--place", place_text)->required();
    sqclass->add_option("--x", x_text)->required();

    auto* hasse = app.add_subcommand("hasse", "invariants of a diagonal form");
    hasse->add_option("--place", place_text);
    hasse->add_option("--form", form_text, "coefficients, e.g. 1,-1,1/49");
    hasse->add_option("--in", in_path, "JSON file {\"place\":..., \"coeffs\":[...]}");

    auto* equiv = app.add_subcommand("equiv", "equivalence of two diagonal forms");
    equiv->add_option("--place", place_text)->required();
    equiv->add_option("--q", form_text)->required();
    equiv->add_option("--q2", form2_text)->required();

    auto* gamma = app.add_subcommand("gamma", "Weil constant of a diagonal form");
    gamma->add_option("--place", place_text);
    gamma->add_option("--form", form_text);
    gamma->add_option("--in", in_path);
    gamma->add_option("--sign", sign, "character convention +1 or -1");

    auto* weil = app.add_subcommand("weil-eq", "Weil's functional equation on a ball indicator");
    weil->add_option("--place", place_text);
    weil->add_option("--form", form_text);
    weil->add_option("--in", in_path);
    weil->add_option("--center", center_text, "ball center, comma separated")->required();
    weil->add_option("--m", m, "ball radius exponent: center + p^{-m} Z_p^n");

    auto* stationary = app.add_subcommand("stationary", "exact oscillatory integral vs stationary phase");
    stationary->add_option("--p", p)->required();
    stationary->add_option("--f", f_text, "polynomial in x, y with integer coefficients")->required();
    stationary->add_option("--m-min", m_min);
    stationary->add_option("--m-max", m_max);

    auto* symsign = app.add_subcommand("sym-sign", "stabilizer form and eps(A, A')");
    symsign->add_option("--place", place_text)->required();
    symsign->add_option("--a", matrix_a, "diag:a,b,c or a JSON matrix")->required();
    symsign->add_option("--b", matrix_b, "second matrix for eps(A, A')");

    auto* orbits = app.add_subcommand("orbits", "orbit count at fixed odd n and determinant class");
    orbits->add_option("--place", place_text)->required();
    orbits->add_option("--n", n);
    orbits->add_option("--d", d_text, "determinant class");

    auto* shintani = app.add_subcommand("shintani", "Gamma-matrix v_ij(s), c, c' and sign vectors");
    shintani->add_option("--n", n);
    shintani->add_option("--s", s_text);
    shintani->add_option("--s-imag", s_imag);

    auto* tate = app.add_subcommand("tate", "n = 1 local functional equation");
    tate->add_option("--place", place_text)->required();
    tate->add_option("--s", s_text);
    tate->add_option("--s-imag", s_imag);
    tate->add_option("--twist", twist_text, "1, u, p, up or a rational");

    auto* mc = app.add_subcommand("sym3-mc", "Monte-Carlo probe over Sym_3(Q_p)");
    mc->add_option("--p", p);
    mc->add_option("--s", mc_s_text);
    mc->add_option("--seed", seed);
    mc->add_option("--samples", samples);
    mc->add_option("--level", level, "truncation level (digits per entry)");

    auto* verify = app.add_subcommand("verify", "run acceptance suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--seed", seed);
    verify->add_option("--p", p_opt);
    verify->add_option("--n", n_opt);
    verify->add_option("--place", place_text);
    verify->add_option("--samples", samples, "Monte-Carlo samples for sym3-mc");
    verify->add_option("--out", out_path, "also write the report to this file");
    verify->add_flag("--timing", timing, "include wall time (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Result result;
    std::string command;
    try {
        if (hilbert->parsed()) {
            command = "hilbert";
            const Place place = parse_place_field("--place", place_text);
            const Rational a = parse_rational_field("--a", a_text), b = parse_rational_field("--b", b_text);
            if (a == 0) throw UsageError("--a", "must be nonzero");
            if (b == 0) throw UsageError("--b", "must be nonzero");
            result.body = {{"place", place.to_string()}, {"a", to_string(a)}, {"b", to_string(b)},
                           {"symbol", to_int(hilbert_symbol(a, b, place))}};
            if (hilbert->count("--oracle")) {
                const Sign o = hilbert_symbol_oracle(a, b, place);
                result.body["oracle"] = to_int(o);
                result.verified = o == hilbert_symbol(a, b, place);
            }
        } else if (sqclass->parsed()) {
            command = "square-class";
            const Place place = parse_place_field("--place", place_text);
            const Rational x = parse_rational_field("--x", x_text);
            if (x == 0) throw UsageError("--x", "must be nonzero");
            result.body = {{"place", place.to_string()}, {"x", to_string(x)},
                           {"representative", square_class(x, place).representative}};
            if (place.is_padic()) result.body["valuation"] = valuation(x, place);
        } else if (hasse->parsed()) {
            command = "hasse";
            const auto q = read_form("--form", place_text, form_text, in_path);
            result.body = {{"form", to_json(q)}, {"invariants", to_json(invariants(q))}};
        } else if (equiv->parsed()) {
            command = "equiv";
            const Place place = parse_place_field("--place", place_text);
            QuadraticForm q(place, parse_rational_list("--q", form_text)), q2(place, parse_rational_list("--q2", form2_text));
            const auto level_info = witt_filtration_level(q, q2);
            result.body = {{"place", place.to_string()},
                           {"q", to_json(invariants(q))},
                           {"q2", to_json(invariants(q2))},
                           {"equivalent", equivalent(q, q2)},
                           {"relative_hasse", to_int(relative_hasse(q, q2))},
                           {"filtration_level", level_info.level}};
            if (level_info.w2_class) result.body["w2_class"] = to_int(*level_info.w2_class);
        } else if (gamma->parsed()) {
            command = "gamma";
            const auto q = read_form("--form", place_text, form_text, in_path);
            if (sign != 1 && sign != -1) throw UsageError("--sign", "must be +1 or -1");
            result.body = {{"form", to_json(q)},
                           {"gamma", to_json(gamma_form(q, AdditiveCharacter::standard(q.place(), sign)))}};
        } else if (weil->parsed()) {
            command = "weil-eq";
            const auto q = read_form("--form", place_text, form_text, in_path);
            BallIndicator ball{parse_rational_list("--center", center_text), m};
            auto c = verify_weil_equation(q, ball, AdditiveCharacter::standard(q.place()));
            result.verified = c.residual < 1e-9;
            result.body = {{"form", to_json(q)},           {"center", to_json(ball.center)},
                           {"m", m},                         {"lhs", to_json(c.lhs)},
                           {"rhs", to_json(c.rhs)},          {"residual", c.residual},
                           {"gamma", to_json(c.gamma)},      {"tolerance", 1e-9}};
        } else if (stationary->parsed()) {
            command = "stationary";
            std::optional<PhasePolynomial> f;
            try {
                f.emplace(PhasePolynomial::parse(f_text, p));
            } catch (const std::invalid_argument& e) {
                throw UsageError("--f", e.what());
            }
            const auto psi = AdditiveCharacter::standard(f->place());
            json points = json::array();
            for (const auto& cp : critical_points(*f)) {
                json res = json::array();
                for (const auto& x : cp.residue_mod_p) res.push_back(x.str());
                json hess = json::array();
                for (const auto& c : cp.hessian_form.coeffs()) hess.push_back(square_class(c, f->place()).representative);
                points.push_back({{"residue_mod_p", res}, {"hessian_classes", hess}, {"precision", cp.precision}});
            }
            auto rep = compare_stationary(*f, m_min, m_max, psi, 1e-10);
            json rows = json::array();
            for (const auto& row : rep.rows) {
                rows.push_back({{"m", row.m},
                                {"exact", to_json(row.exact)},
                                {"prediction", to_json(row.prediction)},
                                {"difference", row.difference},
                                {"level", row.level}});
                result.verified = result.verified && row.difference < 1e-10;
            }
            result.body = {{"p", p}, {"f", f->polynomial().to_string()}, {"critical_points", points}, {"rows", rows},
                           {"tolerance", 1e-10}};
            result.body["threshold"] = rep.threshold ? json(*rep.threshold) : json(nullptr);
        } else if (symsign->parsed()) {
            command = "sym-sign";
            const Place place = parse_place_field("--place", place_text);
            const SymMatrix a = parse_matrix_field("--a", matrix_a);
            const auto st = stabilizer_form(a, place);
            result.body = {{"place", place.to_string()},
                           {"a", to_json(a)},
                           {"stabilizer_form", to_json(st.form.coeffs())},
                           {"stabilizer_hasse", to_int(hasse_invariant(st.form))}};
            if (!matrix_b.empty()) {
                const SymMatrix b = parse_matrix_field("--b", matrix_b);
                auto c = verify_signprop(a, b, place);
                result.body["b"] = to_json(b);
                result.body["epsilon_pair"] = to_int(c.epsilon_pair);
                result.body["relative_hasse"] = to_int(c.relative_hasse);
                result.body["signprop_holds"] = c.holds;
                result.verified = c.holds;
            }
            if (a.size() % 2 == 1) {
                auto sc = scaled_orbit_sign(a, place);
                result.body["orbit_sign"] = to_int(sc);
            }
        } else if (orbits->parsed()) {
            command = "orbits";
            const Place place = parse_place_field("--place", place_text);
            if (n < 1 || n % 2 == 0) throw UsageError("--n", "must be odd and positive");
            const Rational d = parse_rational_field("--d", d_text);
            if (d == 0) throw UsageError("--d", "must be nonzero");
            const auto cls = square_class(d, place);
            result.body = {{"place", place.to_string()}, {"n", n}, {"det_class", cls.representative},
                           {"orbits", sl_orbit_count(static_cast<std::size_t>(n), cls, place)}};
        } else if (shintani->parsed()) {
            command = "shintani";
            const Complex s = parse_s(s_text, s_imag);
            if (n < 1 || n > max_shintani_n) throw UsageError("--n", "must lie in [1, 20]");
            auto g = gamma_matrix(n, s);
            json v = json::array();
            for (const auto& row : g.v) {
                json r = json::array();
                for (auto x : row) r.push_back(to_json(x));
                v.push_back(r);
            }
            json c = json::array(), cp = json::array();
            for (auto x : c_vector(g)) c.push_back(to_json(x));
            for (auto x : c_prime_vector(g)) cp.push_back(to_json(x));
            result.body = {{"n", n}, {"s", to_json(s)}, {"v", v}, {"c", c}, {"c_prime", cp}};
            if (n % 2 == 1) {
                auto sv = check_sign_vectors(n, s);
                result.body["sign_vectors"] = {{"holds", sv.holds},
                                               {"expected_c", sv.expected_c},
                                               {"expected_c_prime", sv.expected_c_prime},
                                               {"max_deviation", sv.max_deviation}};
                result.verified = sv.holds;
            }
        } else if (tate->parsed()) {
            command = "tate";
            const Place place = parse_place_field("--place", place_text);
            const MultiplicativeCharacter chi{parse_s(s_text, s_imag), parse_twist(twist_text, place)};
            FunctionalEquationReport rep;
            double tol = 1e-9;
            if (place.is_real()) {
                rep = real_tate_check(chi, default_real_family());
                tol = 1e-6;
            } else {
                rep = tate_check(place.prime(), chi, default_padic_family(place.prime()),
                                 AdditiveCharacter::standard(place));
            }
            result.verified = rep.max_deviation < tol;
            result.body = to_json(rep);
            result.body["tolerance"] = tol;
            if (place.is_real() && chi.s.imag() == 0.0) {
                auto g = real_gamma_matrix_check(chi.s.real(), default_real_family());
                result.body["gamma_matrix"] = {{"residual", g.residual}, {"c", to_json(g.c)}};
                result.verified = result.verified && g.residual < 1e-6;
            }
        } else if (mc->parsed()) {
            command = "sym3-mc";
            Sym3McConfig cfg;
            cfg.p = p;
            cfg.s = parse_s(mc_s_text, s_imag);
            cfg.seed = seed;
            cfg.samples = samples;
            if (level > 0) cfg.truncation = level;
            auto rep = padic_sym3_mc_check(cfg);
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"label", row.label},
                                {"lhs", to_json(row.lhs)},
                                {"lhs_stderr", row.lhs_stderr},
                                {"rhs", to_json(row.rhs)},
                                {"ratio", to_json(row.ratio)},
                                {"ratio_stderr", row.ratio_stderr},
                                {"singular_fraction", row.singular_fraction}});
            result.body = {{"p", cfg.p},          {"s", to_json(cfg.s)},
                           {"seed", cfg.seed},    {"samples", cfg.samples},
                           {"rows", rows},        {"difference", to_json(rep.difference)},
                           {"sigma", rep.sigma},  {"agree", rep.agree},
                           {"resolved", rep.resolved}};
            result.verified = rep.agree;
        } else if (verify->parsed()) {
            command = "verify";
            SuiteOptions opts;
            opts.seed = seed;
            opts.p = p_opt;
            opts.n = n_opt;
            opts.mc_samples = samples;
            if (verify->count("--place")) opts.place = parse_place_field("--place", place_text);
            json suites = json::array();
            bool all_gating_pass = true, found = false;
            for (const auto& entry : suite_registry()) {
                if (suite == "all" ? !entry.gating : suite != entry.name) continue;
                found = true;
                const auto t0 = std::chrono::steady_clock::now();
                SuiteReport rep = entry.run(opts);
                json j = to_json(rep);
                j["criterion"] = entry.criterion;
                if (timing)
                    j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                suites.push_back(j);
                if (rep.gating && !rep.pass()) all_gating_pass = false;
                if (!rep.gating && suite != "all" && !rep.pass()) all_gating_pass = false;
            }
            if (!found) throw UsageError("--suite", "unknown suite '" + suite + "'");
            result.verified = all_gating_pass;
            result.body = {{"suite", suite}, {"seed", seed}, {"pass", all_gating_pass}, {"suites", suites}};
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw UsageError("--out", "cannot write '" + out_path + "'");
                f << envelope(command, result.body).dump(2) << '\n';
                if (!f) throw UsageError("--out", "write failed for '" + out_path + "'");
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cout << envelope(command, {{"error", e.what()}, {"field", e.field()}}).dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cout << envelope(command, {{"error", e.what()}}).dump(2) << '\n';
        return 2;
    }
    std::cout << envelope(command, result.body).dump(2) << '\n';
    return result.verified ? 0 : 1;
}
