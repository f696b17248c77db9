// Command-line front end: verify, sweep, convergence.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgrushin/error.hpp"
#include "qgrushin/theorems.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qgrushin;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "infinity") return kInfinity;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorCode::InvalidArgument, "p must be a real number or 'inf', got '" + s + "'");
    return v;
}

struct Cli {
    RunConfig cfg;
    std::string p_text = "4";
    std::vector<double> q{1.0, 1.0, 1.0};
    std::string mode = "AD";
    bool csv = false;
    std::string output_dir;
    std::vector<std::string> p_values{"3.5", "4", "10", "100", "1000", "inf"};
    std::vector<double> steps{1e-2, 1e-3, 1e-4};
    double L = 0.0;
    double threshold = 0.0;
    double perturb = 0.0;

    void add_common(CLI::App* app) {
        app->add_option("--theorem", cfg.theorem, "t31 t32 t33 t34 t41 t42 t51 t52 t61 t62 t63 t64 c43 c53")
            ->required();
        app->add_option("--n", cfg.grushin.n, "Grushin exponent n >= 1");
        app->add_option("--a", cfg.grushin.a, "singular point y1-coordinate");
        app->add_option("--b", cfg.grushin.b, "singular point y2-coordinate");
        app->add_option("--c", cfg.grushin.c, "nonzero coefficient c");
        app->add_option("--Q", q, "drift coefficients L,M,N")->delimiter(',')->expected(3);
        app->add_option("--L", L, "complex drift for t32-t34 (default: L of --Q)");
        app->add_option("--p", p_text, "exponent p (real > 1 or 'inf')");
        app->add_option("--r-min", cfg.domain.r_min, "inner sampling radius");
        app->add_option("--r-max", cfg.domain.r_max, "outer sampling radius");
        app->add_option("--cut-margin", cfg.domain.cut_margin, "minimum |y2-b| on the cut side");
        app->add_option("--count", cfg.domain.count, "number of sample points");
        app->add_option("--seed", cfg.domain.seed, "sampling seed");
        app->add_option("--mode", mode, "AD, FD or Oracle");
        app->add_option("--h0", cfg.options.fd.h0, "finite-difference base step");
        app->add_option("--levels", cfg.options.fd.levels, "Richardson levels");
        app->add_option("--threshold", threshold, "pass threshold on the max relative residual");
        app->add_option("--perturb-alpha", perturb, "scale alpha by (1 + value) (negative control)");
        app->add_flag("--csv", csv, "emit CSV instead of JSON");
        app->add_option("--output-dir", output_dir, "also write the report here (env QGRUSHIN_OUTPUT_DIR)");
    }

    void finalize(const CLI::App* app) {
        cfg.q = {0.0, q[0], q[1], q[2]};
        if (app->count("--L") > 0) cfg.L = L;
        if (app->count("--threshold") > 0) cfg.options.threshold = threshold;
        if (app->count("--perturb-alpha") > 0) cfg.perturb_alpha = perturb;
        cfg.p = parse_p(p_text);
        cfg.options.mode = mode_from_string(mode);
        cfg.options.fd.validate();
        cfg.domain.validate();
        if (output_dir.empty()) {
            if (const char* env = std::getenv("QGRUSHIN_OUTPUT_DIR")) output_dir = env;
        }
    }

    void emit(const std::string& text, const std::string& stem) const {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        if (output_dir.empty()) return;
        fs::create_directories(output_dir);
        const fs::path path = fs::path(output_dir) / (stem + (csv ? ".csv" : ".json"));
        std::ofstream(path) << text;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const Cli& cli) {
    const TheoremCase tc = build_case(cli.cfg);
    if (tc.kind == CaseKind::Dirichlet) {
        const DirichletReport r = dirichlet_check(tc.spec);
        if (!r.applicable) throw Error(ErrorCode::InvalidArgument, r.explanation + " (" + cli.cfg.theorem + ")");
        cli.emit(dump(dirichlet_to_json(r)), cli.cfg.theorem + "_dirichlet");
        return r.passed ? kPass : kFail;
    }
    const ResidualReport r = run_residuals(tc.spec, tc.op, cli.cfg.domain, cli.cfg.options);
    cli.emit(cli.csv ? report_to_csv(r) : dump(report_to_json(r)), cli.cfg.theorem + "_verify");
    return r.passed ? kPass : kFail;
}

int cmd_sweep(const Cli& cli) {
    json rows = json::array();
    bool invalid = false, failed = false;
    for (const auto& ptext : cli.p_values) {
        RunConfig cfg = cli.cfg;
        cfg.p = parse_p(ptext);
        json row{{"p", ptext}};
        try {
            const TheoremCase tc = build_case(cfg);
            if (tc.kind != CaseKind::Residual) throw Error(ErrorCode::InvalidArgument, "sweep needs a theorem, not a corollary");
            const ResidualReport r = run_residuals(tc.spec, tc.op, cfg.domain, cfg.options);
            row["family"] = std::string(to_string(tc.spec.family));
            row["alpha"] = static_cast<double>(tc.spec.alpha);
            row["beta"] = static_cast<double>(tc.spec.beta);
            row["max_rel_residual"] = std::isfinite(r.max_rel_residual) ? json(r.max_rel_residual) : json(nullptr);
            row["status"] = r.passed ? "pass" : "fail";
            failed = failed || !r.passed;
        } catch (const Error& e) {
            row["status"] = std::string(to_string(e.code())) + ": " + e.what();
            invalid = true;
        }
        rows.push_back(row);
    }
    if (cli.csv) {
        std::ostringstream os;
        os.precision(17);
        os << "p,family,alpha,beta,max_rel_residual,status\n";
        for (const auto& r : rows) {
            auto field = [&](const char* k) -> std::string {
                if (!r.contains(k) || r[k].is_null()) return "";
                return r[k].is_string() ? r[k].get<std::string>() : r[k].dump();
            };
            os << field("p") << ',' << field("family") << ',' << field("alpha") << ',' << field("beta") << ','
               << field("max_rel_residual") << ",\"" << field("status") << "\"\n";
        }
        cli.emit(os.str(), cli.cfg.theorem + "_sweep");
    } else {
        cli.emit(dump(json{{"theorem", cli.cfg.theorem}, {"rows", rows}}), cli.cfg.theorem + "_sweep");
    }
    if (invalid) return kInvalid;
    return failed ? kFail : kPass;
}

int cmd_convergence(const Cli& cli) {
    const TheoremCase tc = build_case(cli.cfg);
    if (tc.kind != CaseKind::Residual) throw Error(ErrorCode::InvalidArgument, "convergence needs a theorem, not a corollary");
    for (double h : cli.steps) {
        if (!(h > 0.0 && h <= 1e-2)) throw Error(ErrorCode::InvalidArgument, "steps must lie in (0, 1e-2]");
    }
    const ConvergenceReport r = convergence_study(tc.spec, tc.op, cli.cfg.domain, cli.steps);
    if (cli.csv) {
        std::ostringstream os;
        os.precision(17);
        os << "h,median_rel_residual\n";
        for (std::size_t i = 0; i < r.steps.size(); ++i) os << r.steps[i] << ',' << r.median_residuals[i] << '\n';
        os << "# order," << r.order << '\n';
        cli.emit(os.str(), cli.cfg.theorem + "_convergence");
    } else {
        cli.emit(dump(convergence_to_json(r)), cli.cfg.theorem + "_convergence");
    }
    return r.passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residual verification of quaternion-drift p-Laplace solutions on Grushin planes"};
    app.require_subcommand(1);
    Cli cli;
    auto* verify = app.add_subcommand("verify", "check that a solution family annihilates its operator");
    auto* sweep = app.add_subcommand("sweep", "max residual over a list of p values");
    auto* conv = app.add_subcommand("convergence", "finite-difference order estimate");
    for (auto* sub : {verify, sweep, conv}) cli.add_common(sub);
    sweep->add_option("--p-values", cli.p_values, "comma-separated p values ('inf' allowed)")->delimiter(',');
    conv->add_option("--steps", cli.steps, "comma-separated relative steps")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        CLI::App* active = verify->parsed() ? verify : sweep->parsed() ? sweep : conv;
        cli.finalize(active);
        if (active == verify) return cmd_verify(cli);
        if (active == sweep) return cmd_sweep(cli);
        return cmd_convergence(cli);
    } catch (const Error& e) {
        std::cerr << "invalid parameters: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kInvalid;
    }
}
