#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "latmin/latmin.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    static const fs::path tmp = [] {
        fs::path dir = fs::temp_directory_path() / "latmin_cli_test";
        fs::create_directories(dir);
        return dir;
    }();
    const fs::path out = tmp / "out.txt", err = tmp / "err.txt";
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" +
                            LATMIN_CLI_PATH + "\" " + args + " > " + out.string() + " 2> " +
                            err.string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace

TEST_CASE("eval reports the invariant value at an equivalent point") {
    const RunResult canon = run_cli("eval --b 1 --z 0.5+0.8660254038i --format json");
    REQUIRE(canon.exit_code == 0);
    const json j = json::parse(canon.out);
    const double f_here = j["f"].get<double>();
    const double f_canon = latmin::f_b(
        latmin::MixWeight{1.0},
        latmin::UhpPoint{j["re_canonical"].get<double>(), j["im_canonical"].get<double>()});
    CHECK(std::abs(f_here - f_canon) < 1e-8);
}

TEST_CASE("eval at the fixed point has vanishing Y") {
    const RunResult r = run_cli("eval --b 0.5 --z i --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["y_b"].get<double>()) < 1e-10);
}

TEST_CASE("eval canonicalizes a reflected point") {
    const RunResult r = run_cli("eval --b 0.3 --z -0.4+1.2i --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["re_canonical"].get<double>() == doctest::Approx(0.4));
    CHECK(j["im_canonical"].get<double>() == doctest::Approx(1.2));
    REQUIRE(j["word"].size() == 1);
    CHECK(j["word"][0].get<std::string>() == "R");
}

TEST_CASE("eval exit codes: parse and domain errors") {
    CHECK(run_cli("eval --b 0.5 --z pancake").exit_code == 2);
    CHECK(run_cli("eval --b 0.5 --z 1-2i").exit_code == 3);
    CHECK(run_cli("eval --b 0.5").exit_code == 2); // missing required option
}

TEST_CASE("complex literals tolerate embedded spaces") {
    const RunResult r = run_cli("eval --b 0.3 --z \"-0.4 + 1.2i\" --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"].get<int>() == 1);
    CHECK(j["re_canonical"].get<double>() == doctest::Approx(0.4));
}

TEST_CASE("phase sweep with coarse step") {
    const RunResult r = run_cli("phase --b-min 0 --b-max 1 --step 0.25");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "b,re_zstar,im_zstar,class,param,f_value");
    const std::array<std::string, 5> expected = {"Rectangular", "Square", "Square", "Square",
                                                 "Hexagonal"};
    for (int i = 0; i < 5; ++i) CHECK(split_csv(lines[i + 1])[3] == expected[i]);
    // the param column is empty for square and hexagonal rows
    CHECK(split_csv(lines[2])[4].empty());
    CHECK(split_csv(lines[5])[4].empty());
    CHECK(!split_csv(lines[1])[4].empty());
}

TEST_CASE("degenerate phase range yields a single square row") {
    const RunResult r = run_cli("phase --b-min 0.5 --b-max 0.5 --step 0.25");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(split_csv(lines[1])[3] == "Square");
}

TEST_CASE("phase CSV round-trips through re-evaluation") {
    const RunResult r = run_cli("phase --b-min 0 --b-max 1 --step 0.1");
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 12);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 6);
        const double b = std::stod(f[0]);
        const latmin::UhpPoint z{std::stod(f[1]), std::stod(f[2])};
        CHECK(std::abs(latmin::f_b(latmin::MixWeight{b}, z) - std::stod(f[5])) <= 1e-12);
    }
}

TEST_CASE("phase JSON mirrors the CSV fields under stable keys") {
    const RunResult r = run_cli("phase --b-min 0 --b-max 1 --step 0.5 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"].get<int>() == 1);
    REQUIRE(j["points"].size() == 3);
    const auto& row = j["points"][0];
    for (const char* key : {"b", "re_zstar", "im_zstar", "class", "param", "f_value"})
        CHECK(row.contains(key));
    CHECK(j["points"][0]["class"].get<std::string>() == "Rectangular");
    CHECK(j["points"][1]["param"].is_null()); // Square row
    CHECK(j["points"][2]["class"].get<std::string>() == "Hexagonal");
}

TEST_CASE("phase writes to a file and fails cleanly on bad paths") {
    const fs::path out = fs::temp_directory_path() / "latmin_phase_test.csv";
    const RunResult ok =
        run_cli("phase --b-min 0.4 --b-max 0.6 --step 0.1 --out " + out.string());
    CHECK(ok.exit_code == 0);
    CHECK(slurp(out).starts_with("b,re_zstar,im_zstar,class,param,f_value\n"));
    fs::remove(out);

    const RunResult bad =
        run_cli("phase --b-min 0.4 --b-max 0.6 --step 0.1 --out /nonexistent/dir/x.csv");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("verify constants suite includes the threshold line") {
    const RunResult r = run_cli("verify --suite constants");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B_threshold") != std::string::npos);
    CHECK(r.out.find("0.1867") != std::string::npos);
}

TEST_CASE("verify beta suite prints the four conditions") {
    const RunResult r = run_cli("verify --suite beta --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 5); // header + 4
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(split_csv(lines[i])[0].starts_with("beta_condition_"));
}

TEST_CASE("verify all exits zero on a correct build") {
    const RunResult r = run_cli("verify --suite all");
    CHECK(r.exit_code == 0);
}

TEST_CASE("verify rejects unknown suites") {
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("energy: hexagonal for fully coupled equal species") {
    const RunResult r = run_cli("energy --omega1 0.01 --omega2 0.01 --g11 1 --g12 1 --g22 1 "
                                "--format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["class"].get<std::string>() == "Hexagonal");
    CHECK(j["disjoint"].get<bool>());
}

TEST_CASE("energy: decoupled species give the sqrt(3) rectangle") {
    const RunResult r = run_cli("energy --omega1 0.01 --omega2 0.02 --g11 1 --g12 0 --g22 1 "
                                "--format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["class"].get<std::string>() == "Rectangular");
    CHECK(std::abs(j["param"].get<double>() - std::sqrt(3.0)) < 1e-6);
}

TEST_CASE("energy exit codes: invalid parameters and overlap") {
    CHECK(run_cli("energy --omega1 0.7 --omega2 0.7 --g11 1 --g12 0.5 --g22 1").exit_code == 3);
    CHECK(run_cli("energy --omega1 0.42 --omega2 0.42 --g11 2 --g12 1 --g22 2").exit_code == 5);
}

TEST_CASE("green matches the half-period value at the cell midpoint") {
    const RunResult r = run_cli("green --tau i --point 0.5 0.5 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["g"].get<double>() - j["g_mid"].get<double>()) < 1e-12);
}

TEST_CASE("green square symmetry between the two half periods") {
    const RunResult a = run_cli("green --tau i --point 0.5 0 --format json");
    const RunResult b = run_cli("green --tau i --point 0 0.5 --format json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(std::abs(json::parse(a.out)["g"].get<double>() -
                   json::parse(b.out)["g"].get<double>()) < 1e-12);
}

TEST_CASE("green rejects lattice points") {
    CHECK(run_cli("green --tau i --point 0 0").exit_code == 3);
}

TEST_CASE("series budget flags and environment override") {
    // An absurdly small cap makes the gradient series fail near the axis.
    const RunResult flag = run_cli("--max-terms 16 eval --b 0.5 --z 0.3+0.05i");
    CHECK(flag.exit_code != 0);
    const RunResult env = run_cli("eval --b 0.5 --z 0.3+0.05i", "LATMIN_BUDGET_MAXTERMS=16");
    CHECK(env.exit_code != 0);
    // an explicit flag beats the environment default
    const RunResult flag_wins =
        run_cli("--max-terms 4096 eval --b 0.5 --z 0.3+0.05i", "LATMIN_BUDGET_MAXTERMS=16");
    CHECK(flag_wins.exit_code == 0);
    const RunResult ok = run_cli("eval --b 0.5 --z 0.3+0.05i");
    CHECK(ok.exit_code == 0);
}
