#include "humbert/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "humbert/asym.hpp"
#include "humbert/errors.hpp"
#include "humbert/euler.hpp"
#include "humbert/laplace.hpp"
#include "humbert/series.hpp"
#include "humbert/specials.hpp"
#include "humbert/spherical.hpp"

namespace humbert {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int oracle_digits_default() {
    if (const char* env = std::getenv("HUMBERT_ORACLE_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 16) return d;
    }
    return 50;
}

struct ParamFlags {
    std::optional<double> alpha, alpha_p, beta, beta_p, gamma, gamma_p, lambda;
    std::vector<double> upper_x, upper_y, lower_x, lower_y; // KdF lists

    void attach(CLI::App* cmd) {
        auto opt = [&](const char* name, std::optional<double>& slot, const char* desc) {
            cmd->add_option_function<double>(
                name, [&slot](const double& v) { slot = v; }, desc);
        };
        opt("--alpha", alpha, "parameter alpha (a for F2/Psi families)");
        opt("--alpha-p", alpha_p, "parameter alpha'");
        opt("--beta", beta, "parameter beta (b)");
        opt("--beta-p", beta_p, "parameter beta' (b')");
        opt("--gamma", gamma, "parameter gamma (c); joint gamma for kdf");
        opt("--gamma-p", gamma_p, "parameter gamma' (c')");
        opt("--lambda", lambda, "integrated-family parameter lambda");
        cmd->add_option("--upper-x", upper_x, "kdf upper x-side parameters")->delimiter(',');
        cmd->add_option("--upper-y", upper_y, "kdf upper y-side parameters")->delimiter(',');
        cmd->add_option("--lower-x", lower_x, "kdf lower x-side parameters")->delimiter(',');
        cmd->add_option("--lower-y", lower_y, "kdf lower y-side parameters")->delimiter(',');
    }

    ParamSet build(Family f) const {
        ParamSet p;
        p.family = f;
        p.alpha = alpha;
        p.alpha_p = alpha_p;
        p.beta = beta;
        p.beta_p = beta_p;
        p.gamma = gamma;
        p.gamma_p = gamma_p;
        p.lambda = lambda;
        p.validate();
        return p;
    }

    KdFSpec build_kdf() const {
        KdFSpec spec;
        spec.gamma = gamma.value_or(1.0);
        spec.upper_x = upper_x;
        spec.upper_y = upper_y;
        spec.lower_x = lower_x;
        spec.lower_y = lower_y;
        spec.validate();
        return spec;
    }
};

nlohmann::json value_json(const ValueEstimate& v) {
    nlohmann::json j;
    j["schema"] = 1;
    j["value"] = v.value;
    j["abs_err"] = v.abs_err;
    j["method"] = method_name(v.method);
    j["terms_used"] = v.terms_used;
    j["nodes_used"] = v.nodes_used;
    j["log_scale"] = v.log_scale;
    j["degraded"] = v.degraded;
    return j;
}

ValueEstimate eval_route(const std::string& route, const ParamFlags& pf, Family fam,
                         const EvalPoint& pt, int digits) {
    if (fam == Family::KdF) {
        KdFSpec spec = pf.build_kdf();
        if (route == "series" || route == "auto") return eval_kdf_series(spec, pt);
        if (route == "euler") return eval_kdf_euler(spec, pt, 0.5 * spec.gamma);
        if (route == "ilt") return eval_kdf_ilt(spec, pt);
        throw DomainError("route '" + route + "' not available for kdf");
    }
    ParamSet p = pf.build(fam);
    if (route == "auto" || route == "series") return eval_series(p, pt);
    if (route == "oracle") return eval_oracle(p, pt, digits);
    if (route == "euler") {
        if (fam == Family::F2 || fam == Family::Psi1 || fam == Family::Psi2)
            return eval_semi_infinite(p, pt);
        if (fam == Family::Phi2i || fam == Family::Phi3i) return eval_integrated_by_w(p, pt);
        return eval_euler(p, pt);
    }
    if (route == "ilt") return eval_ilt(p, pt);
    if (route == "asym") return asym_eval(p, pt).value;
    throw DomainError("unknown route: " + route);
}

std::vector<std::string> routes_for(Family f) {
    switch (f) {
        case Family::F2:
        case Family::Psi1:
        case Family::Psi2:
            return {"series", "euler"};
        case Family::KdF:
            return {"series", "euler", "ilt"};
        default:
            return {"series", "euler", "ilt"};
    }
}

void print_value(std::ostream& out, const std::string& format, const ValueEstimate& v) {
    if (format == "csv") {
        out << "value,abs_err,method,terms_used,nodes_used,log_scale,degraded\n";
        out << fmt17(v.value) << "," << fmt17(v.abs_err) << "," << method_name(v.method) << ","
            << v.terms_used << "," << v.nodes_used << "," << fmt17(v.log_scale) << ","
            << (v.degraded ? 1 : 0) << "\n";
    } else {
        out << value_json(v).dump(2) << "\n";
    }
}

int cmd_identities(std::ostream& out, const std::string& suite, double tol, std::uint64_t seed,
                   const std::string& format) {
    struct Row {
        std::string name;
        double residual;
    };
    std::vector<Row> rows;
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::uniform_real_distribution<double> gd(0.6, 5.0);
    std::uniform_int_distribution<int> mn(0, 8);
    bool all = suite == "all";
    if (all || suite == "beta") {
        double worst = 0;
        for (int i = 0; i < 12; ++i) {
            int m = mn(rng), n = mn(rng);
            double g = gd(rng), eps = 0.5 * g;
            double achieved = 0;
            long nodes = 0;
            double quad = tanh_sinh_01<double>(
                [&](double u, double omu) {
                    return std::pow(omu, n + eps - 1.0) * std::pow(u, m + g - eps - 1.0);
                },
                1e-13, 12, achieved, nodes);
            double exact = gamma_fn(n + eps) * gamma_fn(m + g - eps) / gamma_fn(m + n + g);
            worst = std::max(worst, std::fabs(quad - exact) / exact);
        }
        rows.push_back({"beta_decoupling", worst});
    }
    if (all || suite == "lambda-gamma") {
        ReductionResiduals r1 = lambda_gamma_reduction_check(1.0, 1.0, 2.0, {0.4, 0.3, 1.0});
        ReductionResiduals r2 = lambda_gamma_reduction_check(0.5, 1.5, 2.5, {2.0, 1.0, 1.0}, true);
        rows.push_back({"lambda_gamma_phi2", std::max(r1.phi2, r2.phi2)});
        rows.push_back({"lambda_gamma_phi3", std::max(r1.phi3, r2.phi3)});
    }
    if (all || suite == "corollary2") {
        double worst = 0;
        worst = std::max(worst, corollary2_check(1.0, 1.0, 2.0, 1.0, 1.0, 1.0));
        worst = std::max(worst, corollary2_check(0.5, 1.5, 2.5, 2.0, 0.5, 3.0));
        worst = std::max(worst, corollary2_check(1.2, 0.7, 2.2, 1.5, 1.2, 2.0));
        rows.push_back({"corollary2", worst});
    }
    if (all || suite == "addition") {
        double worst = 0;
        for (double g : {1.5, 2.0, 3.7}) {
            for (double x : {0.3, 1.0, 2.0}) {
                for (double y : {0.5, 1.5, 2.0}) {
                    KdFSpec add{{}, g, {}, {}, {}, {}};
                    double lhs = eval_kdf_euler(add, EvalPoint{-x, -y, 1.0}, 0.5 * g).value;
                    double rhs = hyp0f1(g, x + y).real_value();
                    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
                }
            }
        }
        rows.push_back({"addition_theorem", worst});
    }
    if (all || suite == "laplace-pairs") {
        std::vector<double> grid{0.7, 1.0, 2.0, 5.0};
        rows.push_back({"lapFa", laplace_pair_check(LaplacePairKind::lapFa, {1.5}, 0.8, grid)});
        rows.push_back({"lapFb", laplace_pair_check(LaplacePairKind::lapFb, {0.8, 1.9}, 1.1, grid)});
        rows.push_back({"lapFc", laplace_pair_check(LaplacePairKind::lapFc, {1.2, 0.7, 2.3}, 1.4, grid)});
        rows.push_back({"eq29", laplace_pair_check(LaplacePairKind::eq29, {0.9, 1.7, 1.3}, 1.2, grid)});
    }
    if (rows.empty()) throw DomainError("unknown identity suite: " + suite);
    bool ok = true;
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        for (const auto& r : rows) {
            j["residuals"][r.name] = r.residual;
            ok = ok && r.residual < tol;
        }
        j["tol"] = tol;
        j["pass"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "suite,residual,pass\n";
        for (const auto& r : rows) {
            bool pass = r.residual < tol;
            ok = ok && pass;
            out << r.name << "," << fmt17(r.residual) << "," << (pass ? 1 : 0) << "\n";
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-variable hypergeometric function evaluator"};
    app.require_subcommand(1);

    std::string family_name_arg = "phi2";
    std::string route = "auto";
    std::string format = "json";
    double x = 0.0, y = 0.0, t = 1.0;
    int digits = oracle_digits_default();
    ParamFlags pf;

    auto add_point = [&](CLI::App* cmd) {
        cmd->add_option("--x", x, "x in the substitution convention (argument is -t x)");
        cmd->add_option("--y", y, "y in the substitution convention (argument is -t y)");
        cmd->add_option("--t", t, "scale t > 0");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_name_arg, "f3|xi1|xi2|phi2|phi3|phi2i|phi3i|f2|psi1|psi2|kdf");
        pf.attach(cmd);
        add_point(cmd);
        cmd->add_option("--format", format, "json|csv");
        cmd->add_option("--digits", digits, "oracle working digits");
    };

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate one function value");
    add_common(c_eval);
    c_eval->add_option("--route", route, "auto|series|oracle|euler|ilt|asym");

    CLI::App* c_compare = app.add_subcommand("compare", "evaluate all routes and compare");
    add_common(c_compare);
    double cmp_tol = 0.0;
    c_compare->add_option("--tol", cmp_tol, "fail (exit 1) if pairwise deviation exceeds this");

    CLI::App* c_asym = app.add_subcommand("asym", "asymptotic branch and ratio probe");
    add_common(c_asym);
    std::vector<double> t_grid;
    std::string variant = "corrected";
    std::string exact = "auto";
    c_asym->add_option("--t-grid", t_grid, "increasing t values")->delimiter(',');
    c_asym->add_option("--variant", variant, "corrected|printed");
    c_asym->add_option("--exact", exact, "auto|oracle|ilt|euler|wintegral");

    CLI::App* c_ident = app.add_subcommand("identities", "run identity residual suites");
    std::string suite = "all";
    double ident_tol = 1e-8;
    std::uint64_t seed = 42;
    c_ident->add_option("--suite", suite, "beta|lambda-gamma|corollary2|addition|laplace-pairs|all");
    c_ident->add_option("--tol", ident_tol, "residual threshold for exit status");
    c_ident->add_option("--seed", seed, "random grid seed");
    c_ident->add_option("--format", format, "json|csv");

    CLI::App* c_cons = app.add_subcommand("constraint", "spherical-constraint solver");
    double d = 3.0, g = 1.0, gamma_diss = 1.0, C = 1.0;
    double t_min = 100.0, t_max = 10000.0;
    int t_count = 20;
    bool probe = false;
    std::string backend = "auto";
    c_cons->add_option("--d", d, "spatial dimension");
    c_cons->add_option("--g", g, "quantum coupling");
    c_cons->add_option("--gamma-diss", gamma_diss, "dissipative coupling");
    c_cons->add_option("--C", C, "initial-state constant");
    c_cons->add_option("--t", t, "single solve at this t");
    c_cons->add_option("--t-min", t_min, "probe grid start");
    c_cons->add_option("--t-max", t_max, "probe grid end");
    c_cons->add_option("--t-count", t_count, "probe grid size");
    c_cons->add_flag("--probe", probe, "run the scaling probe over the grid");
    c_cons->add_option("--backend", backend, "auto|oracle|euler|ilt");
    c_cons->add_option("--format", format, "json|csv");

    CLI::App* c_sweep = app.add_subcommand("sweep", "map eval over a grid of t or x or y");
    add_common(c_sweep);
    std::string over = "t";
    double from = 1.0, to = 10.0;
    int count = 10;
    bool log_spaced = false;
    int threads = 1;
    c_sweep->add_option("--route", route, "auto|series|oracle|euler|ilt|asym");
    c_sweep->add_option("--over", over, "t|x|y");
    c_sweep->add_option("--from", from, "grid start");
    c_sweep->add_option("--to", to, "grid end");
    c_sweep->add_option("--count", count, "grid size");
    c_sweep->add_flag("--log", log_spaced, "log-spaced grid");
    c_sweep->add_option("--threads", threads, "worker threads (deterministic merge)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_eval->parsed()) {
            Family fam = family_from_name(family_name_arg);
            ValueEstimate v = eval_route(route, pf, fam, EvalPoint{x, y, t}, digits);
            print_value(out, format, v);
            return 0;
        }
        if (c_compare->parsed()) {
            Family fam = family_from_name(family_name_arg);
            std::vector<std::pair<std::string, ValueEstimate>> results;
            for (const std::string& r : routes_for(fam)) {
                try {
                    results.emplace_back(r, eval_route(r, pf, fam, EvalPoint{x, y, t}, digits));
                } catch (const Error& e) {
                    err << "route " << r << " unavailable: " << e.what() << "\n";
                }
            }
            if (results.size() < 2) {
                err << "fewer than two routes available at this point\n";
                return 1;
            }
            double worst = 0;
            for (std::size_t i = 0; i < results.size(); ++i)
                for (std::size_t j = i + 1; j < results.size(); ++j) {
                    double a = results[i].second.value * std::exp(results[i].second.log_scale -
                                                                  results[j].second.log_scale);
                    double dev = std::fabs(a - results[j].second.value) /
                                 std::max(std::fabs(results[j].second.value), 1e-300);
                    worst = std::max(worst, dev);
                }
            if (format == "csv") {
                out << "route,value,abs_err,log_scale\n";
                for (auto& [name, v] : results)
                    out << name << "," << fmt17(v.value) << "," << fmt17(v.abs_err) << ","
                        << fmt17(v.log_scale) << "\n";
                out << "max_pairwise_deviation," << fmt17(worst) << ",,\n";
            } else {
                nlohmann::json j;
                j["schema"] = 1;
                for (auto& [name, v] : results) j["routes"][name] = value_json(v);
                j["max_pairwise_deviation"] = worst;
                out << j.dump(2) << "\n";
            }
            return (cmp_tol > 0 && worst > cmp_tol) ? 1 : 0;
        }
        if (c_asym->parsed()) {
            Family fam = family_from_name(family_name_arg);
            ParamSet p = pf.build(fam);
            if (t_grid.empty()) t_grid = {10.0, 100.0, 1000.0};
            Variant var = variant == "printed" ? Variant::Printed : Variant::Corrected;
            ExactRoute er = ExactRoute::Auto;
            if (exact == "oracle") er = ExactRoute::Oracle;
            else if (exact == "ilt") er = ExactRoute::ILT;
            else if (exact == "euler") er = ExactRoute::Euler;
            else if (exact == "wintegral") er = ExactRoute::WIntegral;
            RatioProbe probe_r = ratio_probe(p, x, y, t_grid, er, var);
            out << "# branch: " << probe_r.branch_guard << "\n";
            out << "# trend: " << (probe_r.trend_defined ? fmt17(probe_r.trend) : "undefined")
                << "\n";
            out << probe_r.to_csv();
            return 0;
        }
        if (c_ident->parsed()) return cmd_identities(out, suite, ident_tol, seed, format);
        if (c_cons->parsed()) {
            ModelConstants mc{d, g, gamma_diss, C};
            ConstraintBackend cb = ConstraintBackend::Auto;
            if (backend == "oracle") cb = ConstraintBackend::OracleSeries;
            else if (backend == "euler") cb = ConstraintBackend::EulerRoute;
            else if (backend == "ilt") cb = ConstraintBackend::ILT;
            if (probe) {
                std::vector<double> grid;
                for (int i = 0; i < t_count; ++i)
                    grid.push_back(t_min * std::pow(t_max / t_min,
                                                    t_count == 1 ? 0.0 : double(i) / (t_count - 1)));
                ScalingReport rep = scaling_probe(mc, grid, cb);
                out << (format == "csv" ? rep.to_csv() : rep.to_json() + "\n");
                return 0;
            }
            ConstraintState st = solve_z(t, mc, {0.0, 0.0}, cb);
            if (format == "csv") {
                out << "t,Z,residual,negative_ok,evaluations\n";
                out << fmt17(st.t) << "," << fmt17(st.Z) << "," << fmt17(st.residual) << ","
                    << (st.negative_ok ? 1 : 0) << "," << st.evaluations << "\n";
            } else {
                nlohmann::json j;
                j["schema"] = 1;
                j["t"] = st.t;
                j["Z"] = st.Z;
                j["residual"] = st.residual;
                j["negative_ok"] = st.negative_ok;
                j["evaluations"] = st.evaluations;
                out << j.dump(2) << "\n";
            }
            return 0;
        }
        if (c_sweep->parsed()) {
            Family fam = family_from_name(family_name_arg);
            std::vector<double> grid;
            for (int i = 0; i < count; ++i) {
                double s = count == 1 ? 0.0 : double(i) / (count - 1);
                grid.push_back(log_spaced ? from * std::pow(to / from, s) : from + (to - from) * s);
            }
            struct RowOut {
                double g = 0;
                ValueEstimate v;
                std::string error;
            };
            std::vector<RowOut> rows(grid.size());
            int nth = std::max(1, threads);
            std::vector<std::thread> workers;
            std::atomic<std::size_t> next{0};
            auto work = [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= grid.size()) break;
                    RowOut& r = rows[i];
                    r.g = grid[i];
                    EvalPoint pt{over == "x" ? grid[i] : x, over == "y" ? grid[i] : y,
                                 over == "t" ? grid[i] : t};
                    try {
                        r.v = eval_route(route, pf, fam, pt, digits);
                    } catch (const Error& e) {
                        r.error = e.what();
                    }
                }
            };
            for (int i = 0; i < nth; ++i) workers.emplace_back(work);
            for (auto& w : workers) w.join();
            out << over << ",value,abs_err,method,log_scale,error\n";
            bool any_err = false;
            for (const auto& r : rows) {
                any_err = any_err || !r.error.empty();
                out << fmt17(r.g) << "," << fmt17(r.v.value) << "," << fmt17(r.v.abs_err) << ","
                    << method_name(r.v.method) << "," << fmt17(r.v.log_scale) << "," << r.error
                    << "\n";
            }
            return any_err ? 1 : 0;
        }
    } catch (const Error& e) {
        err << "evaluation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace humbert
