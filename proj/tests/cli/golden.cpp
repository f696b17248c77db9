// Runs the CLI and checks its JSON report against the library's own.
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qgrushin/theorems.hpp"

using nlohmann::json;
using namespace qgrushin;

namespace {

std::string run(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << '\n';
        ++failures;
    } else {
        std::cout << "ok: " << what << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_golden <qgrushin> <work dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::filesystem::path work = argv[2];
    std::filesystem::create_directories(work);

    RunConfig cfg;
    cfg.theorem = "t52";
    cfg.grushin = {2, 0.5, -1.0, -2.0};
    cfg.q = {0.0, 1.0, -1.0, 0.0};
    cfg.p = 10.0;
    cfg.domain.count = 64;
    cfg.domain.seed = 7;
    const TheoremCase tc = build_case(cfg);
    const json expected = report_to_json(run_residuals(tc.spec, tc.op, cfg.domain, cfg.options));

    int status = 0;
    const std::string out = run(cli + " verify --theorem t52 --n 2 --a 0.5 --b -1 --c -2 --Q 1,-1,0 --p 10 "
                                      "--count 64 --seed 7 --output-dir " + (work / "out").string(),
                                status);
    json got;
    try {
        got = json::parse(out);
    } catch (const std::exception& e) {
        std::cerr << "unparseable CLI output: " << e.what() << '\n' << out;
        return 1;
    }
    check(status == 0, "t52 exits 0");
    check(got == expected, "stdout report equals the library report");
    std::ifstream saved(work / "out" / "t52_verify.json");
    check(saved && json::parse(saved) == expected, "saved report equals the library report");

    const std::string sweep = run(cli + " sweep --theorem t41 --Q 2,0,0 --count 20 --p-values 4,inf", status);
    const json s = json::parse(sweep);
    check(s.at("rows").size() == 2, "sweep reports two rows");
    check(s.at("rows")[1].at("family") == "DivFormInfinity", "p = inf switches to the infinity family");
    check(s.at("rows")[0].at("alpha").get<double>() == 0.25, "alpha for Q = 2i, p = 4 is 1/4");

    return failures == 0 ? 0 : 1;
}
