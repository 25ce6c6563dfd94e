// latmin: evaluate the reduced lattice objective, sweep the phase diagram,
// query periodic Green's functions, run the energy pipeline, and audit the
// numerical verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "latmin/latmin.hpp"

namespace {

using json = nlohmann::json;

enum ExitCode {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_parse_error = 2,
    exit_domain_error = 3,
    exit_unwritable = 4,
    exit_overlap = 5,
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1); // from_chars rejects '+'
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// Accepts a+bi, a-bi, bi, i, -i, and plain reals; spaces allowed anywhere.
std::optional<std::complex<double>> parse_complex(std::string s) {
    std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
    if (s.empty()) return std::nullopt;

    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) {
        double re;
        if (!parse_double(s, re)) return std::nullopt;
        return std::complex<double>{re, 0.0};
    }
    s.pop_back(); // drop the i

    // Split at the last top-level sign (not an exponent sign, not leading).
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // Pure imaginary: "i", "-i", "2i", "-0.5i"
        if (s.empty() || s == "+" || s == "-") {
            return std::complex<double>{0.0, s == "-" ? -1.0 : 1.0};
        }
        double im;
        if (!parse_double(s, im)) return std::nullopt;
        return std::complex<double>{0.0, im};
    }

    const std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    double re;
    if (!parse_double(re_part, re)) return std::nullopt;
    double im;
    if (im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else if (!parse_double(im_part, im)) {
        return std::nullopt;
    }
    return std::complex<double>{re, im};
}

std::string word_to_string(const latmin::GroupWord& word) {
    std::string s = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ", ";
        s += latmin::generator_name(word[i]);
    }
    return s + "]";
}

std::string class_param_string(const latmin::LatticeClass& k) {
    return k.has_param() ? fmt17(k.param) : std::string{};
}

// Default term cap, overridable from the environment; an explicit
// --max-terms flag still wins.
int default_max_terms() {
    if (const char* env = std::getenv("LATMIN_BUDGET_MAXTERMS")) {
        char* endp = nullptr;
        const long parsed = std::strtol(env, &endp, 10);
        if (endp && *endp == '\0' && parsed >= 16) return static_cast<int>(parsed);
    }
    return 4096;
}

latmin::SeriesBudget make_budget(double rel_tol, int max_terms) {
    latmin::SeriesBudget budget;
    budget.rel_tol = rel_tol;
    budget.max_terms = max_terms;
    budget.validate();
    return budget;
}

int run_eval(double b, const std::string& z_text, const std::string& format,
             const latmin::SeriesBudget& budget) {
    const auto z_parsed = parse_complex(z_text);
    if (!z_parsed) {
        std::cerr << "error: cannot parse complex literal '" << z_text << "'\n";
        return exit_parse_error;
    }
    if (!(z_parsed->imag() > 0.0)) {
        std::cerr << "error: z must lie in the upper half-plane (Im z > 0)\n";
        return exit_domain_error;
    }
    const latmin::UhpPoint z{*z_parsed};
    const double f = latmin::f_b(latmin::MixWeight{b}, z, budget);
    const latmin::Gradient g = latmin::grad_f_b(latmin::MixWeight{b}, z, budget);
    const latmin::CanonicalPoint canon = latmin::canonicalize(z);

    if (format == "json") {
        json out{{"schema", 1},
                 {"b", b},
                 {"re_z", z.x()},
                 {"im_z", z.y()},
                 {"f", f},
                 {"x_b", g.x},
                 {"y_b", g.y},
                 {"re_canonical", canon.point.x()},
                 {"im_canonical", canon.point.y()},
                 {"near_singular_corner", latmin::near_singular_corner(z)}};
        json word = json::array();
        for (auto tag : canon.word) word.push_back(latmin::generator_name(tag));
        out["word"] = word;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "b,re_z,im_z,f,x_b,y_b,re_canonical,im_canonical,word\n"
                  << fmt17(b) << ',' << fmt17(z.x()) << ',' << fmt17(z.y()) << ',' << fmt17(f)
                  << ',' << fmt17(g.x) << ',' << fmt17(g.y) << ',' << fmt17(canon.point.x()) << ','
                  << fmt17(canon.point.y()) << ",\"" << word_to_string(canon.word) << "\"\n";
    } else {
        std::cout << "f_b(z)    = " << fmt17(f) << "\n"
                  << "X_b(z)    = " << fmt17(g.x) << "\n"
                  << "Y_b(z)    = " << fmt17(g.y) << "\n"
                  << "canonical = " << fmt17(canon.point.x()) << " + " << fmt17(canon.point.y())
                  << "i\n"
                  << "word      = " << word_to_string(canon.word) << "\n";
        if (latmin::near_singular_corner(z))
            std::cout << "note      = evaluation near the singular corner (Im z < 0.05)\n";
    }
    return exit_ok;
}

int run_phase(double b_min, double b_max, double step, const std::string& format,
              const std::string& out_path, const latmin::SeriesBudget& budget) {
    const auto points = latmin::phase_diagram(b_min, b_max, step, budget);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return exit_unwritable;
        }
        os = &file;
    }

    if (format == "json") {
        json rows = json::array();
        for (const auto& p : points) {
            json row{{"b", p.b},
                     {"re_zstar", p.z_star.x()},
                     {"im_zstar", p.z_star.y()},
                     {"class", p.klass.name()},
                     {"f_value", p.f_value}};
            if (p.klass.has_param())
                row["param"] = p.klass.param;
            else
                row["param"] = nullptr;
            rows.push_back(row);
        }
        *os << json{{"schema", 1}, {"points", rows}}.dump(2) << "\n";
    } else {
        // text == csv for sweeps; the header line is a format contract
        *os << "b,re_zstar,im_zstar,class,param,f_value\n";
        for (const auto& p : points) {
            *os << fmt17(p.b) << ',' << fmt17(p.z_star.x()) << ',' << fmt17(p.z_star.y()) << ','
                << p.klass.name() << ',' << class_param_string(p.klass) << ','
                << fmt17(p.f_value) << "\n";
        }
    }
    if (!out_path.empty() && !file.good()) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return exit_unwritable;
    }
    return exit_ok;
}

int run_verify(const std::string& suite, const std::string& format,
               const latmin::SeriesBudget& budget) {
    std::vector<latmin::CheckResult> checks;
    auto append = [&](std::vector<latmin::CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };

    if (suite == "constants" || suite == "all") append(latmin::check_reference_constants(budget));
    if (suite == "beta" || suite == "all") append(latmin::check_beta_conditions(1.08, budget));
    if (suite == "appendix" || suite == "all") append(latmin::appendix_suite(budget, 500));
    if (suite == "lemmas" || suite == "all") append(latmin::check_lemma_suite(budget));
    if (checks.empty()) {
        std::cerr << "error: unknown suite '" << suite
                  << "' (expected constants|beta|appendix|lemmas|all)\n";
        return exit_parse_error;
    }

    bool all_passed = true;
    for (const auto& c : checks)
        if (c.kind != latmin::CheckResult::Kind::Info && !c.passed) all_passed = false;

    if (format == "json") {
        json rows = json::array();
        for (const auto& c : checks) {
            rows.push_back(json{{"name", c.name},
                                {"computed", c.computed},
                                {"expected", c.expected},
                                {"tolerance", c.tolerance},
                                {"passed", c.passed},
                                {"margin", c.margin()}});
        }
        std::cout << json{{"schema", 1}, {"suite", suite}, {"passed", all_passed},
                          {"checks", rows}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "name,computed,expected,tolerance,passed,margin\n";
        for (const auto& c : checks)
            std::cout << c.name << ',' << fmt17(c.computed) << ',' << fmt17(c.expected) << ','
                      << fmt17(c.tolerance) << ',' << (c.passed ? "true" : "false") << ','
                      << fmt17(c.margin()) << "\n";
    } else {
        for (const auto& c : checks) {
            const char* status = c.kind == latmin::CheckResult::Kind::Info ? "info"
                                 : c.passed                                ? "pass"
                                                                           : "FAIL";
            std::printf("[%s] %-32s computed=% .12g", status, c.name.c_str(), c.computed);
            if (c.kind == latmin::CheckResult::Kind::Equality)
                std::printf("  expected=% .7g  tol=%.2g  margin=% .3g", c.expected, c.tolerance,
                            c.margin());
            else if (c.kind != latmin::CheckResult::Kind::Info)
                std::printf("  bound=% .7g  margin=% .3g", c.expected, c.margin());
            std::printf("\n");
        }
        std::printf("suite '%s': %s\n", suite.c_str(), all_passed ? "all checks passed" : "FAILED");
    }
    return all_passed ? exit_ok : exit_check_failed;
}

int run_energy(double w1, double w2, double g11, double g12, double g22,
               const std::string& format, const latmin::SeriesBudget& budget) {
    std::optional<latmin::SpeciesParams> params;
    try {
        params.emplace(w1, w2, g11, g12, g22);
    } catch (const latmin::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    }

    try {
        const latmin::AssemblyResult res = latmin::minimal_assembly(*params, budget);
        const auto& a = res.assembly;
        if (format == "json") {
            json out{{"schema", 1},
                     {"b", res.phase.b},
                     {"re_zstar", res.phase.z_star.x()},
                     {"im_zstar", res.phase.z_star.y()},
                     {"class", res.phase.klass.name()},
                     {"re_a1", a.basis.a1().real()},
                     {"im_a1", a.basis.a1().imag()},
                     {"re_a2", a.basis.a2().real()},
                     {"im_a2", a.basis.a2().imag()},
                     {"r1", a.r1},
                     {"r2", a.r2},
                     {"t_alpha", res.t_alpha},
                     {"energy_per_cell_area", res.energy_per_cell_area},
                     {"disjoint", true}};
            if (res.phase.klass.has_param())
                out["param"] = res.phase.klass.param;
            else
                out["param"] = nullptr;
            std::cout << out.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "b,re_zstar,im_zstar,class,param,re_a1,im_a1,re_a2,im_a2,r1,r2,t_alpha,"
                         "energy_per_cell_area,disjoint\n"
                      << fmt17(res.phase.b) << ',' << fmt17(res.phase.z_star.x()) << ','
                      << fmt17(res.phase.z_star.y()) << ',' << res.phase.klass.name() << ','
                      << class_param_string(res.phase.klass) << ',' << fmt17(a.basis.a1().real())
                      << ',' << fmt17(a.basis.a1().imag()) << ',' << fmt17(a.basis.a2().real())
                      << ',' << fmt17(a.basis.a2().imag()) << ',' << fmt17(a.r1) << ','
                      << fmt17(a.r2) << ',' << fmt17(res.t_alpha) << ','
                      << fmt17(res.energy_per_cell_area) << ",true\n";
        } else {
            std::cout << "b        = " << fmt17(res.phase.b) << "\n"
                      << "z*       = " << fmt17(res.phase.z_star.x()) << " + "
                      << fmt17(res.phase.z_star.y()) << "i\n"
                      << "class    = " << res.phase.klass.name();
            if (res.phase.klass.has_param())
                std::cout << " (param " << fmt17(res.phase.klass.param) << ")";
            std::cout << "\n"
                      << "alpha1   = " << fmt17(a.basis.a1().real()) << " + "
                      << fmt17(a.basis.a1().imag()) << "i\n"
                      << "alpha2   = " << fmt17(a.basis.a2().real()) << " + "
                      << fmt17(a.basis.a2().imag()) << "i\n"
                      << "r1, r2   = " << fmt17(a.r1) << ", " << fmt17(a.r2) << "\n"
                      << "t_alpha  = " << fmt17(res.t_alpha) << "\n"
                      << "energy   = " << fmt17(res.energy_per_cell_area) << "\n"
                      << "disjoint = yes\n";
        }
        return exit_ok;
    } catch (const latmin::NotDisjoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_overlap;
    }
}

int run_green(const std::string& tau_text, double t1, double t2, const std::string& format,
              const latmin::SeriesBudget& budget) {
    const auto tau_parsed = parse_complex(tau_text);
    if (!tau_parsed) {
        std::cerr << "error: cannot parse complex literal '" << tau_text << "'\n";
        return exit_parse_error;
    }
    if (!(tau_parsed->imag() > 0.0)) {
        std::cerr << "error: tau must lie in the upper half-plane\n";
        return exit_domain_error;
    }
    const latmin::LatticeBasis basis =
        latmin::LatticeBasis::unit_area_from_tau(latmin::UhpPoint{*tau_parsed});
    const std::complex<double> zeta = t1 * basis.a1() + t2 * basis.a2();

    try {
        const double g = latmin::green_value(basis, zeta, budget);
        const latmin::HalfPeriodValues hp = latmin::half_period_values(basis, budget);
        if (format == "json") {
            std::cout << json{{"schema", 1},
                              {"g", g},
                              {"h0", hp.h0},
                              {"g_mid", hp.g_mid},
                              {"g_half1", hp.g_half1},
                              {"g_half2", hp.g_half2}}
                             .dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "g,h0,g_mid,g_half1,g_half2\n"
                      << fmt17(g) << ',' << fmt17(hp.h0) << ',' << fmt17(hp.g_mid) << ','
                      << fmt17(hp.g_half1) << ',' << fmt17(hp.g_half2) << "\n";
        } else {
            std::cout << "G(zeta)          = " << fmt17(g) << "\n"
                      << "H(0)             = " << fmt17(hp.h0) << "\n"
                      << "G((a1+a2)/2)     = " << fmt17(hp.g_mid) << "\n"
                      << "G(a1/2)          = " << fmt17(hp.g_half1) << "\n"
                      << "G(a2/2)          = " << fmt17(hp.g_half2) << "\n";
        }
        return exit_ok;
    } catch (const latmin::OnLattice& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal two-species periodic disc assemblies on planar lattices"};
    app.require_subcommand(1);

    double rel_tol = 1e-14;
    int max_terms = default_max_terms();
    app.add_option("--rel-tol", rel_tol, "relative series tolerance")->capture_default_str();
    app.add_option("--max-terms", max_terms,
                   "series term cap (default from LATMIN_BUDGET_MAXTERMS when set)")
        ->capture_default_str();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate f_b, its gradient, and the canonical point");
    double eval_b = 0.5;
    std::string eval_z = "i", eval_format = "text";
    eval->add_option("--b", eval_b, "mix weight")->required();
    eval->add_option("--z", eval_z, "upper half-plane point, e.g. 0.4+1.2i")->required();
    eval->add_option("--format", eval_format, "text|csv|json");

    // phase
    auto* phase = app.add_subcommand("phase", "sweep the phase diagram over b");
    double b_min = 0.0, b_max = 1.0, step = 0.01;
    std::string phase_format = "csv", out_path;
    phase->add_option("--b-min", b_min, "sweep start")->capture_default_str();
    phase->add_option("--b-max", b_max, "sweep end")->capture_default_str();
    phase->add_option("--step", step, "sweep step")->capture_default_str();
    phase->add_option("--format", phase_format, "csv|json");
    phase->add_option("--out", out_path, "output file (stdout if omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the numerical verification suite");
    std::string suite = "all", verify_format = "text";
    verify->add_option("--suite", suite, "constants|beta|appendix|lemmas|all");
    verify->add_option("--format", verify_format, "text|csv|json");

    // energy
    auto* energy = app.add_subcommand("energy", "minimal assembly for given species parameters");
    double w1 = 0.01, w2 = 0.01, g11 = 1.0, g12 = 1.0, g22 = 1.0;
    std::string energy_format = "text";
    energy->add_option("--omega1", w1, "area fraction of species 1")->required();
    energy->add_option("--omega2", w2, "area fraction of species 2")->required();
    energy->add_option("--g11", g11, "interaction gamma_11")->required();
    energy->add_option("--g12", g12, "interaction gamma_12")->required();
    energy->add_option("--g22", g22, "interaction gamma_22")->required();
    energy->add_option("--format", energy_format, "text|csv|json");

    // green
    auto* green = app.add_subcommand("green", "periodic Green's function queries");
    std::string tau_text = "i", green_format = "text";
    std::vector<double> point{0.5, 0.5};
    green->add_option("--tau", tau_text, "lattice shape parameter, upper half-plane")->required();
    green->add_option("--point", point, "cell coordinates t1 t2 of zeta = t1 a1 + t2 a2")
        ->expected(2);
    green->add_option("--format", green_format, "text|csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse_error;
    }

    try {
        const latmin::SeriesBudget budget = make_budget(rel_tol, max_terms);
        if (eval->parsed()) return run_eval(eval_b, eval_z, eval_format, budget);
        if (phase->parsed()) return run_phase(b_min, b_max, step, phase_format, out_path, budget);
        if (verify->parsed()) return run_verify(suite, verify_format, budget);
        if (energy->parsed()) return run_energy(w1, w2, g11, g12, g22, energy_format, budget);
        if (green->parsed()) return run_green(tau_text, point[0], point[1], green_format, budget);
    } catch (const latmin::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_ok;
}
