// End-to-end tests of the arcrec binary: JSON schemas, exit codes, and
// byte-determinism.  The binary path comes from the build system.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "arcrec/recovery.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text) {
    namespace fs = std::filesystem;
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path in = dir / ("arcrec_test_in_" + std::to_string(counter) + ".json");
    const fs::path out = dir / ("arcrec_test_out_" + std::to_string(counter) + ".json");
    ++counter;

    {
        std::ofstream f(in);
        f << stdin_text;
    }
    const std::string cmd = std::string(ARCREC_CLI_PATH) + " " + args + " < " +
                            in.string() + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out);
    std::ostringstream buf;
    buf << f.rdbuf();
    r.output = buf.str();
    fs::remove(in);
    fs::remove(out);
    return r;
}

}  // namespace

TEST_CASE("forward emits coefficients") {
    const RunResult r =
        run_cli("forward", R"({"arcs": [[0, 3.14159265358979]], "n": 2})");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    const auto& c = j.at("coefficients");
    REQUIRE(c.size() == 3);
    CHECK(c[0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(c[0][1].get<double>() == doctest::Approx(0.0));
    CHECK(c[1][1].get<double>() == doctest::Approx(-0.31831).epsilon(1e-4));
    CHECK(std::fabs(c[2][0].get<double>()) < 1e-5);
}

TEST_CASE("forward handles full and empty sets") {
    const RunResult full = run_cli("forward", R"({"full": true, "n": 1})");
    REQUIRE(full.exit_code == 0);
    CHECK(nlohmann::json::parse(full.output)["coefficients"] ==
          nlohmann::json::parse(R"([[1, 0], [0, 0]])"));

    const RunResult empty = run_cli("forward", R"({"arcs": [], "n": 0})");
    REQUIRE(empty.exit_code == 0);
    CHECK(nlohmann::json::parse(empty.output)["coefficients"] ==
          nlohmann::json::parse(R"([[0, 0]])"));
}

TEST_CASE("recover round-trips the worked example") {
    const RunResult r =
        run_cli("recover", R"([[0.5, 0], [0, -0.3183098861837907], [0, 0]])");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["status"] == "recovered");
    CHECK(j["order"] == 1);
    REQUIRE(j["arcs"].size() == 1);
    const double start = j["arcs"][0][0].get<double>();
    const double end = j["arcs"][0][1].get<double>();
    CHECK(std::fabs(start) < 1e-9);
    CHECK(end == doctest::Approx(std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("recover rejects with the documented reasons and exit code 1") {
    const RunResult mean = run_cli("recover", R"([[1.5, 0]])");
    CHECK(mean.exit_code == 1);
    CHECK(nlohmann::json::parse(mean.output)["reason"] == "invalid_mean_value");

    const RunResult norm = run_cli("recover", R"([[0.5, 0], [0.9, 0], [0, 0]])");
    CHECK(norm.exit_code == 1);
    CHECK(nlohmann::json::parse(norm.output)["reason"] == "norm_not_one");
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("recover", "this is not json").exit_code == 2);
    CHECK(run_cli("forward", R"({"n": 1})").exit_code == 2);
    CHECK(run_cli("forward", R"({"arcs": [[0, 0]], "n": 1})").exit_code == 2);
    CHECK(run_cli("recover", "[]").exit_code == 2);
}

TEST_CASE("roundtrip matches the library value") {
    const RunResult r = run_cli("roundtrip", R"({"arcs": [[0.3, 1.9], [3.0, 4.2]], "n": 4})");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    const double lib = arcrec::roundtrip_error(
        arcrec::normalize({{0.3, 1.9}, {3.0, 4.2}}), 4);
    CHECK(std::fabs(j["max_endpoint_error"].get<double>() - lib) < 1e-12);
    CHECK(j["order"] == 2);
}

TEST_CASE("selftest passes and is byte-deterministic") {
    const std::string args = "selftest --count 10 --seed 42 --n-max 4";
    const RunResult a = run_cli(args, "");
    const RunResult b = run_cli(args, "");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK(j["cases"] == 10);
    CHECK(j["failures"] == 0);
    CHECK(j["max_error"].get<double>() < 1e-6);
}

TEST_CASE("selftest edge parameters") {
    const RunResult empty = run_cli("selftest --count 0 --seed 1", "");
    CHECK(empty.exit_code == 0);
    CHECK(nlohmann::json::parse(empty.output)["cases"] == 0);

    const RunResult trivial = run_cli("selftest --count 8 --seed 7 --n-max 0", "");
    CHECK(trivial.exit_code == 0);
    CHECK(nlohmann::json::parse(trivial.output)["max_error"].get<double>() == 0.0);
}

TEST_CASE("forward piped into recover matches the library round trip") {
    const RunResult fwd = run_cli("forward", R"({"arcs": [[0.5, 1.7], [2.4, 3.3], [4.0, 5.9]], "n": 5})");
    REQUIRE(fwd.exit_code == 0);
    const RunResult rec = run_cli("recover", fwd.output);
    REQUIRE(rec.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(rec.output);
    REQUIRE(j["arcs"].size() == 3);

    const arcrec::ArcUnion e = arcrec::normalize({{0.5, 1.7}, {2.4, 3.3}, {4.0, 5.9}});
    const double lib = arcrec::roundtrip_error(e, 5);
    double worst = 0.0;
    std::size_t idx = 0;
    for (const arcrec::Arc& a : e.arcs()) {
        worst = std::max(worst, std::fabs(j["arcs"][idx][0].get<double>() - a.start));
        worst = std::max(worst, std::fabs(j["arcs"][idx][1].get<double>() - a.end));
        ++idx;
    }
    CHECK(std::fabs(worst - lib) < 1e-12);
}

TEST_CASE("forward output is byte-deterministic") {
    const std::string input = R"({"arcs": [[0.25, 2.5], [4.0, 5.5]], "n": 6})";
    const RunResult a = run_cli("forward", input);
    const RunResult b = run_cli("forward", input);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}
