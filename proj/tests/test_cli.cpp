#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <cctype>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(BOHRLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) {
        res.out.append(buf.data(), got);
        if (got < buf.size()) break;
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!std::isdigit(static_cast<unsigned char>(line[0]))) continue;  // header
        rows.push_back(line);
    }
    return rows;
}

}  // namespace

TEST_CASE("radius command: values and schema") {
    const RunResult r = run("radius --id theoremD_rstar");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["id"] == "theoremD_rstar");
    CHECK(std::abs(j["value"].get<double>() - 0.24683) <= 1e-5);
    CHECK(std::abs(j["residual"].get<double>()) <= 1e-10);
    CHECK(j["bracket"].size() == 2);

    const RunResult rho = run("radius --id theorem4_rho --a0 0.5");
    CHECK(rho.exit_code == 0);
    CHECK(json::parse(rho.out)["value"].get<double>() == doctest::Approx(0.25));

    const RunResult cor7 = run("radius --id corollary7_Rpm --p 1 --m 0");
    CHECK(cor7.exit_code == 0);
    CHECK(std::abs(json::parse(cor7.out)["value"].get<double>() - 0.618034) <= 1e-6);
}

TEST_CASE("radius command: exit codes for bad input and no sign change") {
    CHECK(run("radius --id theoremZZ").exit_code == 2);
    CHECK(run("radius --id theoremD_rstar --bogus-flag 1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);

    // a feeble two-row table whose equation never reaches 1
    const std::string path = "/tmp/bohrlab_feeble_weights.txt";
    {
        std::ofstream w(path);
        w << "1 0\n0.001 1\n";
    }
    CHECK(run("radius --id theorem5_Rstar --p 1 --m 0 --w mono:@" + path).exit_code == 3);
}

TEST_CASE("eval command: functional values") {
    const RunResult mf = run("eval --functional Mf --function phi:a=0.5 --r 0.5");
    CHECK(mf.exit_code == 0);
    const json j = json::parse(mf.out);
    CHECK(std::abs(j["value"].get<double>() - 1.0) <= 1e-9);
    CHECK(j["tail_budget"].get<double>() >= 0.0);
    CHECK(j["function"] == "phi:a=0.5");

    const RunResult area = run("eval --functional area_ratio --function psi:a=0.5 --r 0.4");
    CHECK(area.exit_code == 0);
    CHECK(std::abs(json::parse(area.out)["value"].get<double>() - 0.226757) <= 1e-6);

    const RunResult af0 = run("eval --functional Af0 --function mono:k=1 --r 0.3");
    CHECK(af0.exit_code == 0);
    CHECK(json::parse(af0.out)["value"].get<double>() == doctest::Approx(-0.3));

    CHECK(run("eval --functional nope --function phi:a=0.5 --r 0.3").exit_code == 2);
    CHECK(run("eval --functional Mf --function phi:a=2 --r 0.3").exit_code == 2);
}

TEST_CASE("table1 command: 24 rows and the comparison footer") {
    const RunResult t = run("table1");
    CHECK(t.exit_code == 0);
    const std::vector<std::string> rows = data_rows(t.out);
    REQUIRE(rows.size() == 24);
    double max_diff = 0.0;
    for (const std::string& row : rows) {
        std::istringstream ss(row);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 6);
        // CSV round-trip: the printed 6-decimal value re-parses exactly
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", std::stod(fields[3]));
        CHECK(fields[3] == buf);
        max_diff = std::max(max_diff, std::abs(std::stod(fields[3]) - std::stod(fields[4])));
    }
    CHECK(max_diff <= 1e-5);
    CHECK(t.out.find("# max_abs_diff=") != std::string::npos);
}

TEST_CASE("verify command: pass and exit codes") {
    const RunResult v = run(
        "verify --theorem theoremA --samples 24 --seed 7 --r-points 10 --theta-samples 64");
    CHECK(v.exit_code == 0);
    const json j = json::parse(v.out);
    CHECK(j["theorem_id"] == "theoremA");
    CHECK(j["passed"].get<bool>());
    CHECK(j["sharpness_found"].get<bool>());

    const RunResult t5 = run(
        "verify --theorem theorem5_I --samples 16 --seed 7 --r-points 8 --theta-samples 32");
    CHECK(t5.exit_code == 0);
    const json j5 = json::parse(t5.out);
    bool boundary_note = false;
    for (const auto& n : j5["notes"])
        if (n.get<std::string>().find("boundary equality") != std::string::npos)
            boundary_note = true;
    CHECK(boundary_note);

    CHECK(run("verify --theorem theoremZZ").exit_code == 2);
}

TEST_CASE("sweep command: closed-form families and monotonicity annotation") {
    const RunResult s = run("sweep --id theorem1_Rp --p 2 --param a0 --from 0 --to 0.9 --step 0.1");
    CHECK(s.exit_code == 0);
    for (const std::string& row : data_rows(s.out)) {
        std::istringstream ss(row);
        double a0 = 0.0, val = 0.0;
        char comma = 0;
        ss >> a0 >> comma >> val;
        CHECK(val == doctest::Approx((1.0 + a0) / (3.0 + a0)).epsilon(1e-5));
    }
    CHECK(s.out.find("# monotonicity: nondecreasing") != std::string::npos);

    const RunResult rho = run("sweep --id theorem4_rho --param a0 --from 0 --to 0.9 --step 0.1");
    CHECK(rho.exit_code == 0);
    const std::vector<std::string> rows = data_rows(rho.out);
    CHECK(rows.size() == 10);
    {
        std::istringstream ss(rows.front());
        double a0 = 0.0, val = 0.0;
        char comma = 0;
        ss >> a0 >> comma >> val;
        CHECK(val == doctest::Approx(0.2).epsilon(1e-5));
    }

    // r0(a0) stays inside (r*, 1/3)
    const RunResult r0 = run("sweep --id theoremD_r0 --param a0 --from 0.1 --to 0.9 --step 0.2");
    CHECK(r0.exit_code == 0);
    for (const std::string& row : data_rows(r0.out)) {
        std::istringstream ss(row);
        double a0 = 0.0, val = 0.0;
        char comma = 0;
        ss >> a0 >> comma >> val;
        CHECK(val > 0.2468);
        CHECK(val < 1.0 / 3.0);
    }

    CHECK(run("sweep --id theoremD_rstar --param a0 --from 0 --to 0.5 --step 0.1").exit_code ==
          2);
}

TEST_CASE("outputs round-trip through --out files") {
    const std::string path = "/tmp/bohrlab_cli_out.json";
    const RunResult r = run("radius --id classical_third --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 3.0));
}
