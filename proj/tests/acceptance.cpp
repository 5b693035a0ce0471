// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
//
// Every tolerance is pinned here, in code. Runtime oracles are recomputed on
// the fly; the committed golden records are verified against the oracle too.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "humbert/asym.hpp"
#include "humbert/errors.hpp"
#include "humbert/euler.hpp"
#include "humbert/laplace.hpp"
#include "humbert/pfq.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "humbert/specials.hpp"
#include "humbert/spherical.hpp"

using namespace humbert;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double rel_gap(double a, double b) {
    if (a == 0.0 && b == 0.0) return 0.0;
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

double scaled_gap(const ValueEstimate& a, const ValueEstimate& b) {
    double la = std::log(std::fabs(a.value)) + a.log_scale;
    double lb = std::log(std::fabs(b.value)) + b.log_scale;
    double r = std::exp(la - lb);
    if ((a.value > 0) != (b.value > 0)) r = -r;
    return std::fabs(r - 1.0);
}

struct TrianglePoint {
    ParamSet params;
    double x, y, t;
};

// ---------------------------------------------------------------------------
// criterion 1: route-triangle agreement on documented grids
// ---------------------------------------------------------------------------

std::vector<TrianglePoint> grid_phi2() {
    std::vector<TrianglePoint> g;
    const double ps[5][3] = {{1, 1, 2}, {0.5, 1.25, 2.0}, {0.75, 0.6, 1.7}, {1.3, 0.4, 2.4}, {0.9, 1.8, 3.1}};
    const double xyt[5][3] = {{0.5, 0.25, 1}, {1, 0.5, 0.5}, {-0.5, 0.8, 1.5}, {0.7, -0.4, 2}, {-0.6, -0.9, 5}};
    for (auto& p : ps)
        for (auto& q : xyt) g.push_back({ParamSet::phi2(p[0], p[1], p[2]), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_phi3() {
    std::vector<TrianglePoint> g;
    const double ps[5][2] = {{1, 2}, {0.5, 1.5}, {1.5, 2.5}, {0.8, 1.2}, {2.0, 3.2}};
    const double xyt[5][3] = {{0.5, 0.25, 1}, {1, 1, 0.5}, {0.4, -0.6, 2}, {-0.5, 0.7, 1.5}, {0.8, 0.6, 5}};
    for (auto& p : ps)
        for (auto& q : xyt) g.push_back({ParamSet::phi3(p[0], p[1]), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_xi2() {
    std::vector<TrianglePoint> g;
    const double ps[5][3] = {{1, 1, 2}, {2, 1, 2.5}, {0.7, 1.4, 2.1}, {1.2, 0.6, 1.8}, {1.6, 1.1, 3.0}};
    // series needs |t x| < 1; the image route needs x > 0
    const double xyt[5][3] = {{0.5, 0.5, 1}, {0.3, -0.8, 2}, {0.15, 1.2, 5}, {0.9, 0.7, 0.5}, {0.4, 2.0, 1.5}};
    for (auto& p : ps)
        for (auto& q : xyt) g.push_back({ParamSet::xi2(p[0], p[1], p[2]), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_xi1() {
    std::vector<TrianglePoint> g;
    const double ps[5][4] = {{1, 1, 1, 2}, {0.8, 1.2, 0.7, 2.1}, {1.5, 0.6, 1.1, 2.6}, {0.6, 0.9, 1.4, 1.9}, {1.1, 1.3, 0.5, 3.2}};
    // the image route needs x > 0 and y >= 0 here
    const double xyt[5][3] = {{0.5, 0.4, 1}, {0.3, 0.5, 2}, {0.15, 0.9, 5}, {0.8, 0.3, 0.5}, {0.35, 0.6, 1.5}};
    for (auto& p : ps)
        for (auto& q : xyt) g.push_back({ParamSet::xi1(p[0], p[1], p[2], p[3]), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_f3() {
    std::vector<TrianglePoint> g;
    const double ps[5][5] = {{1, 1, 1, 1, 3}, {0.5, 0.8, 1.2, 0.9, 2.4}, {1.1, 0.7, 0.6, 1.3, 2.8},
                             {0.9, 1.4, 0.8, 0.5, 2.2}, {1.3, 0.6, 1.0, 1.1, 3.5}};
    // both series disks and both image cuts: 0 < t x < 1, 0 < t y < 1
    const double xyt[5][3] = {{0.3, 0.4, 1}, {0.8, 0.5, 0.5}, {0.1, 0.12, 5}, {0.25, 0.15, 2}, {0.45, 0.3, 1.5}};
    for (auto& p : ps)
        for (auto& q : xyt)
            g.push_back({ParamSet::f3(p[0], p[1], p[2], p[3], p[4]), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_phi2i() {
    std::vector<TrianglePoint> g;
    const double ps[5][3] = {{0.5, 1.25, 2.0}, {1.0, 1.0, 2.0}, {0.5, 0.5, 1.5}, {1.25, 0.75, 2.5}, {0.8, 1.6, 2.2}};
    const double xyt[5][3] = {{1, 0.5, 1}, {2, 1, 0.5}, {1, 1, 2}, {0.6, 0.3, 5}, {1.5, 0.5, 2}};
    for (auto& p : ps)
        for (auto& q : xyt)
            g.push_back({ParamSet::phi2i(p[0], p[1], p[2], 1.0), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_phi3i() {
    std::vector<TrianglePoint> g;
    const double ps[5][2] = {{1.0, 1.5}, {0.5, 1.2}, {1.5, 2.1}, {0.75, 1.8}, {1.2, 2.6}};
    const double xyt[5][3] = {{1, 0.5, 1}, {2, 1, 0.5}, {1, 1, 2}, {0.6, 0.3, 5}, {1.5, 0.5, 2}};
    for (auto& p : ps)
        for (auto& q : xyt) g.push_back({ParamSet::phi3i(p[0], p[1], 1.0), q[0], q[1], q[2]});
    return g;
}

std::vector<TrianglePoint> grid_pair_family(Family f) {
    std::vector<TrianglePoint> g;
    // F2's series needs |t x| + |t y| < 1 jointly; Psi1 only |t x| < 1
    const double xyt_f2[5][3] = {{0.3, 0.2, 1}, {0.2, 0.3, 1.5}, {0.35, -0.4, 1}, {-0.3, 0.25, 1}, {0.05, 0.05, 4}};
    const double xyt_psi[5][3] = {{0.3, 0.2, 1}, {0.2, 0.3, 1.5}, {0.5, -1.0, 1}, {-0.4, 0.3, 1}, {0.1, 0.1, 4}};
    for (int i = 0; i < 5; ++i) {
        ParamSet p;
        switch (f) {
            case Family::F2: p = ParamSet::f2(1.0 + 0.1 * i, 1.0, 0.8 + 0.1 * i, 2.0, 2.2); break;
            case Family::Psi1: p = ParamSet::psi1(1.0 + 0.1 * i, 0.9, 2.0, 1.8); break;
            default: p = ParamSet::psi2(1.0 + 0.1 * i, 1.6, 2.1); break;
        }
        for (auto& q : (f == Family::F2 ? xyt_f2 : xyt_psi)) g.push_back({p, q[0], q[1], q[2]});
    }
    return g;
}

ValueEstimate series_value(const TrianglePoint& tp) {
    return eval_series(tp.params, EvalPoint{tp.x, tp.y, tp.t});
}

void criterion1() {
    struct FamilyCase {
        std::string name;
        std::vector<TrianglePoint> grid;
        double tol;
        bool has_ilt;
        bool integrated;
        bool pair_only;
    };
    std::vector<FamilyCase> cases;
    cases.push_back({"phi2", grid_phi2(), 1e-8, true, false, false});
    cases.push_back({"phi3", grid_phi3(), 1e-6, true, false, false});
    cases.push_back({"xi2", grid_xi2(), 1e-6, true, false, false});
    cases.push_back({"xi1", grid_xi1(), 1e-6, true, false, false});
    cases.push_back({"f3", grid_f3(), 1e-6, true, false, false});
    cases.push_back({"phi2i", grid_phi2i(), 1e-6, true, true, false});
    cases.push_back({"phi3i", grid_phi3i(), 1e-6, true, true, false});
    cases.push_back({"f2", grid_pair_family(Family::F2), 1e-6, false, false, true});
    cases.push_back({"psi1", grid_pair_family(Family::Psi1), 1e-6, false, false, true});
    cases.push_back({"psi2", grid_pair_family(Family::Psi2), 1e-6, false, false, true});
    bool all_ok = true;
    std::string detail;
    for (const auto& fc : cases) {
        double worst = 0;
        int n_ok = 0;
        for (const auto& tp : fc.grid) {
            try {
                EvalPoint pt{tp.x, tp.y, tp.t};
                ValueEstimate a = series_value(tp);
                ValueEstimate b;
                if (fc.pair_only) {
                    b = eval_semi_infinite(tp.params, pt);
                    worst = std::max(worst, scaled_gap(a, b));
                } else if (fc.integrated) {
                    b = eval_integrated_by_w(tp.params, pt);
                    ILTConfig icfg;
                    icfg.nodes = 32;
                    icfg.target_tol = 3e-8;
                    ValueEstimate c = eval_ilt(tp.params, pt, icfg);
                    worst = std::max({worst, scaled_gap(a, b), scaled_gap(a, c), scaled_gap(b, c)});
                } else {
                    b = eval_euler(tp.params, pt);
                    ILTConfig icfg;
                    icfg.nodes = 32;
                    icfg.target_tol = 3e-8;
                    ValueEstimate c = eval_ilt(tp.params, pt, icfg);
                    worst = std::max({worst, scaled_gap(a, b), scaled_gap(a, c), scaled_gap(b, c)});
                }
                ++n_ok;
            } catch (const Error& e) {
                all_ok = false;
                detail += fc.name + " point failed: " + e.what() + "; ";
                break;
            }
        }
        bool ok = n_ok == static_cast<int>(fc.grid.size()) && worst < fc.tol;
        if (!ok) {
            all_ok = false;
            detail += fc.name + " worst " + std::to_string(worst) + " tol " + std::to_string(fc.tol) + "; ";
        } else {
            detail += fc.name + " " + std::to_string(worst).substr(0, 8) + "; ";
        }
    }
    report(1, "route-triangle agreement on 25-point grids", all_ok, detail);
}

// ---------------------------------------------------------------------------
// criterion 2: identity suite residuals < 1e-8
// ---------------------------------------------------------------------------

void criterion2() {
    const double tol = 1e-8;
    bool ok = true;
    std::string detail;
    // Beta decoupling on a seeded random grid
    {
        std::mt19937 rng(20260808);
        std::uniform_int_distribution<int> mn(0, 8);
        std::uniform_real_distribution<double> gd(0.5, 5.0);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
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
        ok = ok && worst < 1e-10;
        detail += "beta " + std::to_string(worst) + "; ";
    }
    // lambda = gamma reduction
    {
        ReductionResiduals r1 = lambda_gamma_reduction_check(1.0, 1.0, 2.0, {0.4, 0.3, 1.0});
        ReductionResiduals r2 = lambda_gamma_reduction_check(0.5, 1.5, 2.5, {2.0, 1.0, 1.0}, true);
        double worst = std::max({r1.phi2, r1.phi3, r2.phi2, r2.phi3});
        ok = ok && worst < tol;
        detail += "lambda-gamma " + std::to_string(worst) + "; ";
    }
    // Corollary 2 on five parameter sets
    {
        double worst = 0;
        worst = std::max(worst, corollary2_check(1.0, 1.0, 2.0, 1.0, 1.0, 1.0));
        worst = std::max(worst, corollary2_check(0.5, 1.5, 2.5, 2.0, 0.5, 3.0));
        worst = std::max(worst, corollary2_check(1.2, 0.7, 2.2, 1.5, 1.2, 2.0));
        worst = std::max(worst, corollary2_check(0.8, 0.8, 1.9, 0.7, 2.0, 0.5));
        worst = std::max(worst, corollary2_check(1.5, 0.6, 2.8, 1.1, 0.9, 4.0));
        ok = ok && worst < tol;
        detail += "corollary2 " + std::to_string(worst) + "; ";
    }
    // addition theorem on 9 points
    {
        double worst = 0;
        for (double g : {1.5, 2.0, 3.7})
            for (double pair : {0, 1, 2}) {
                double xx = pair == 0 ? 0.3 : (pair == 1 ? 1.0 : 2.0);
                double yy = pair == 0 ? 0.5 : (pair == 1 ? 1.5 : 0.8);
                KdFSpec add{{}, g, {}, {}, {}, {}};
                double lhs = eval_kdf_euler(add, EvalPoint{-xx, -yy, 1.0}, 0.5 * g).value;
                double rhs = hyp0f1(g, xx + yy).real_value();
                worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
            }
        ok = ok && worst < tol;
        detail += "addition " + std::to_string(worst) + "; ";
    }
    // Laplace pairs on p grids
    {
        std::vector<double> grid{0.7, 1.0, 2.0, 5.0};
        double worst = 0;
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFa, {1.0}, 1.0, {2.0}));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFa, {1.5}, 0.8, grid));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFb, {2.0, 2.0}, 1.3, grid));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFb, {0.8, 1.9}, 1.1, grid));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFc, {1.2, 0.7, 2.3}, 1.4, grid));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::lapFc, {1.2, 1.2, 2.3}, 1.4, grid));
        worst = std::max(worst, laplace_pair_check(LaplacePairKind::eq29, {0.9, 1.7, 1.3}, 1.2, grid));
        ok = ok && worst < tol;
        detail += "laplace-pairs " + std::to_string(worst);
    }
    report(2, "identity suite residuals < 1e-8", ok, detail);
}

// ---------------------------------------------------------------------------
// criterion 3: eps independence of the convolution representation
// ---------------------------------------------------------------------------

void criterion3() {
    QuadratureConfig q;
    q.target_tol = 1e-9;
    const double tol = 3.0 * q.target_tol;
    double worst = 0;
    bool ok = true;
    std::string where;
    auto run_grid = [&](const std::vector<TrianglePoint>& grid) {
        for (const auto& tp : grid) {
            double g = *tp.params.gamma;
            EvalPoint pt{tp.x, tp.y, tp.t};
            try {
                double v1 = eval_euler(tp.params, pt, 0.25 * g, q).value;
                double v2 = eval_euler(tp.params, pt, 0.50 * g, q).value;
                double v3 = eval_euler(tp.params, pt, 0.75 * g, q).value;
                worst = std::max({worst, rel_gap(v1, v2), rel_gap(v2, v3), rel_gap(v1, v3)});
            } catch (const Error& e) {
                ok = false;
                where = e.what();
                return;
            }
        }
    };
    run_grid(grid_phi2());
    run_grid(grid_phi3());
    run_grid(grid_xi2());
    run_grid(grid_xi1());
    run_grid(grid_f3());
    ok = ok && worst < tol;
    report(3, "eps-independence within 3x quadrature tolerance", ok,
           "worst " + std::to_string(worst) + (where.empty() ? "" : "; " + where));
}

// ---------------------------------------------------------------------------
// criterion 4: asymptotic regime validation
// ---------------------------------------------------------------------------

struct ProbeCase {
    std::string name;
    ParamSet params;
    double x, y;
    ExactRoute route;
    bool oscillatory_j; // build a zero-avoiding grid from the J order
    double j_order;
    double j_scale; // |y| entering 2 sqrt(y t)
    double extra_phase = 0.0;
};

void criterion4() {
    std::vector<double> decades{10.0, 100.0, 1000.0, 10000.0};
    std::vector<ProbeCase> cases;
    // Theorem 1, all six branches
    cases.push_back({"T1 x>0,y>0", ParamSet::phi2(0.5, 0.5, 2.0), 1.0, 1.0, ExactRoute::ILT, false, 0, 0});
    cases.push_back({"T1 x>0,y<0", ParamSet::phi2(0.5, 0.75, 2.0), 1.0, -0.5, ExactRoute::ILT, false, 0, 0});
    cases.push_back({"T1 x<0,y>0", ParamSet::phi2(0.75, 0.5, 2.0), -0.5, 1.0, ExactRoute::ILT, false, 0, 0});
    cases.push_back({"T1 x<y<0", ParamSet::phi2(0.5, 0.75, 2.2), -1.0, -0.5, ExactRoute::ILT, false, 0, 0});
    cases.push_back({"T1 y<x<0", ParamSet::phi2(0.5, 0.75, 2.2), -0.5, -1.0, ExactRoute::ILT, false, 0, 0});
    cases.push_back({"T1 x=y<0", ParamSet::phi2(0.5, 0.75, 2.2), -1.0, -1.0, ExactRoute::ILT, false, 0, 0});
    // Theorem 2, three branches
    cases.push_back({"T2 x>0,y>0", ParamSet::phi3(1.0, 2.5), 1.0, 1.0, ExactRoute::Auto, true, 0.5, 1.0});
    cases.push_back({"T2 x>0,y<0", ParamSet::phi3(1.0, 2.5), 1.0, -1.0, ExactRoute::Auto, false, 0, 0});
    cases.push_back({"T2 x<0", ParamSet::phi3(1.0, 2.5), -1.0, 1.0, ExactRoute::ILT, false, 0, 0});
    // Theorem 3, alpha != beta branches (corrected prefactor; see criterion 5)
    cases.push_back({"T3 y>0,a>b", ParamSet::xi2(2.0, 1.0, 2.5), 0.8, 1.0, ExactRoute::Euler, true, 0.5, 1.0});
    cases.push_back({"T3 y<0,a>b", ParamSet::xi2(2.0, 1.0, 2.5), 0.8, -1.0, ExactRoute::Euler, false, 0, 0});
    cases.push_back({"T3 y>0,a<b", ParamSet::xi2(1.0, 2.0, 2.5), 0.8, 1.0, ExactRoute::Euler, true, 0.5, 1.0});
    cases.push_back({"T3 y<0,a<b", ParamSet::xi2(1.0, 2.0, 2.5), 0.8, -1.0, ExactRoute::Euler, false, 0, 0});
    // Theorem 4, three branches
    cases.push_back({"T4 alg", ParamSet::phi3i(1.5, 1.5, 1.0), 1.0, 1.0, ExactRoute::Auto, false, 0, 0});
    {
        // cosine branch: antinodes of cos(2 sqrt(yt) + pi/2 (b-g-1/2))
        ProbeCase c{"T4 cos", ParamSet::phi3i(0.25, 1.0, 1.0), 1.0, 1.0, ExactRoute::Auto, true, 0, 1.0};
        c.extra_phase = 0.5 * M_PI * (0.25 - 1.0 - 0.5);
        c.j_order = std::numeric_limits<double>::quiet_NaN(); // use extra_phase directly
        cases.push_back(c);
    }
    cases.push_back({"T4 y<0", ParamSet::phi3i(0.5, 1.5, 1.0), 1.0, -1.0, ExactRoute::Auto, false, 0, 0});
    // Theorem 5 (beta != beta' exercises the exponent on the (x-y)t factor)
    cases.push_back({"T5 x>y>0", ParamSet::phi2i(0.5, 1.25, 2.5, 1.0), 2.0, 1.0, ExactRoute::WIntegral, false, 0, 0});
    bool all_ok = true;
    std::string detail;
    for (const auto& c : cases) {
        std::vector<double> grid = decades;
        if (c.oscillatory_j) {
            if (std::isnan(c.j_order)) {
                grid.clear();
                for (double t0 : decades) grid.push_back(antinode_t(c.extra_phase, c.j_scale, t0));
            } else {
                grid = antinode_grid_j(c.j_order, c.j_scale, decades);
            }
        }
        try {
            RatioProbe probe = ratio_probe(c.params, c.x, c.y, grid, c.route, Variant::Corrected);
            int valid = 0;
            for (bool v : probe.valid) valid += v ? 1 : 0;
            bool ok = valid >= 3 && probe.trend_defined && probe.trend < 0.0;
            if (c.name == "T1 x>0,y>0")
                ok = ok && probe.valid[3] && std::fabs(probe.ratios[3] - 1.0) < 0.05;
            if (!ok) {
                std::string why = "trend " + std::to_string(probe.trend) + " valid " +
                                  std::to_string(valid);
                for (std::size_t i = 0; i < probe.notes.size(); ++i)
                    if (!probe.notes[i].empty()) why += " [" + probe.notes[i] + "]";
                detail += c.name + ": " + why + "; ";
                all_ok = false;
            }
        } catch (const Error& e) {
            detail += c.name + " threw: " + e.what() + "; ";
            all_ok = false;
        }
    }
    report(4, "asymptotic regimes: negative |ratio-1| trend on every branch", all_ok, detail);
}

// ---------------------------------------------------------------------------
// criterion 5: printed-vs-corrected prefactor probe (open-question resolution)
// ---------------------------------------------------------------------------

void criterion5() {
    ParamSet p = ParamSet::xi2(2.0, 1.0, 3.5);
    std::vector<double> grid = antinode_grid_j(3.5 - 1.0 - 1.0, 1.0, {10.0, 100.0, 1000.0, 10000.0});
    RatioProbe corr = ratio_probe(p, 0.8, 1.0, grid, ExactRoute::Euler, Variant::Corrected);
    RatioProbe prin = ratio_probe(p, 0.8, 1.0, grid, ExactRoute::Euler, Variant::Printed);
    bool valid = corr.valid.back() && prin.valid.back();
    double d_corr = std::fabs(corr.ratios.back() - 1.0);
    double d_prin = std::fabs(prin.ratios.back() - 1.0);
    // exactly one variant converges to 1; the other tends to a constant != 1
    bool one_converges = valid && ((d_corr < 0.1 && d_prin > 0.5) || (d_prin < 0.1 && d_corr > 0.5));
    std::string winner = d_corr < d_prin ? "Gamma(gamma)Gamma(a-b)/Gamma(a)" : "printed";
    bool matches_findings = d_corr < d_prin; // FINDINGS.md records the corrected form
    report(5, "Theorem-3 prefactor probe identifies exactly one convergent variant",
           one_converges && matches_findings,
           "validated: " + winner + " (|r-1| corrected " + std::to_string(d_corr) +
               ", printed " + std::to_string(d_prin) + "); recorded in FINDINGS.md");
}

// ---------------------------------------------------------------------------
// criterion 6: Tauberian small-p slope
// ---------------------------------------------------------------------------

void criterion6() {
    struct Case {
        double b, bp, g, x, y;
    };
    std::vector<Case> cases{{0.8, 1.1, 2.4, 1.0, 2.0}, {0.5, 0.5, 2.0, 1.0, 1.0}, {1.3, 0.6, 3.1, 0.7, 1.6}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        LaplaceImage img = LaplaceImage::make(ParamSet::phi2(c.b, c.bp, c.g), c.x, c.y);
        double slope = image_small_p_slope(img);
        double expect = c.b + c.bp - c.g;
        double err = std::fabs(slope - expect);
        ok = ok && err < 1e-3;
        detail += std::to_string(slope) + " vs " + std::to_string(expect) + "; ";
    }
    report(6, "Phi2 image small-p slope equals beta+beta'-gamma within 1e-3", ok, detail);
}

// ---------------------------------------------------------------------------
// criterion 7: spherical-model solver and scaling laws
// ---------------------------------------------------------------------------

void criterion7() {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(100.0 * std::pow(100.0, i / 19.0));
    bool ok = true;
    std::string detail;
    try {
        ModelConstants d3{3.0, 1.0, 1.0, 1.0};
        ScalingReport rep3 = scaling_probe(d3, grid);
        bool neg = true;
        for (double z : rep3.Z) neg = neg && z < 0.0;
        bool resid = true;
        for (double r : rep3.residual) resid = resid && r < 1e-8;
        bool exp3 = rep3.loglaw_exponent > -1.3 && rep3.loglaw_exponent < -0.7;
        ok = ok && neg && resid && exp3 && rep3.defined;
        detail += "d=3 loglaw-exponent " + std::to_string(rep3.loglaw_exponent) +
                  (neg ? "" : " (Z>=0 seen!)") + (resid ? "" : " (residual>1e-8)") + "; ";
        ModelConstants d2{2.0, 1.0, 1.0, 1.0};
        ScalingReport rep2 = scaling_probe(d2, grid);
        bool neg2 = true;
        for (double z : rep2.Z) neg2 = neg2 && z < 0.0;
        bool exp2 = rep2.power_exponent > -1.3 && rep2.power_exponent < -0.7;
        ok = ok && neg2 && exp2 && rep2.defined;
        detail += "d=2 power-exponent " + std::to_string(rep2.power_exponent) +
                  (neg2 ? "" : " (Z>=0 seen!)");
    } catch (const Error& e) {
        ok = false;
        detail += std::string("threw: ") + e.what();
    }
    report(7, "spherical constraint: 20-point solve, Z<0, fitted exponents in [-1.3,-0.7]", ok,
           detail);
}

// ---------------------------------------------------------------------------
// criterion 8: cancellation robustness with automatic fallback
// ---------------------------------------------------------------------------

void criterion8() {
    bool ok = true;
    std::string detail;
    struct Case {
        ParamSet p;
        double x, y, t;
    };
    std::vector<Case> cases{
        {ParamSet::phi2(0.75, 1.25, 2.0), 30.0, 20.0, 1.0},
        {ParamSet::phi2(0.5, 0.5, 1.5), 50.0, 50.0, 1.0},
        {ParamSet::phi2(1.2, 0.7, 2.3), 10.0, 50.0, 1.0},
        {ParamSet::phi3(0.8, 1.7), 50.0, 10.0, 1.0},
        {ParamSet::phi3(1.5, 2.5), 25.0, 50.0, 1.0},
    };
    for (const auto& c : cases) {
        EvalPoint pt{c.x, c.y, c.t};
        try {
            ValueEstimate fixed = eval_series_fixed(c.p, pt);
            // double-only evaluation may fail but must flag, never lie
            if (!fixed.degraded && fixed.rel_err() > 1e-6) {
                ok = false;
                detail += "fixed path returned unflagged garbage; ";
            }
            ValueEstimate auto_v = eval_series(c.p, pt);
            bool flagged_ok = auto_v.rel_err() < 1e-6;
            ValueEstimate check = eval_oracle(c.p, pt, 90);
            double gap = rel_gap(auto_v.value, check.value);
            if (!(flagged_ok && gap < 1e-7 && auto_v.method == Method::Oracle)) {
                ok = false;
                detail += "auto fallback err " + std::to_string(auto_v.rel_err()) + " gap " +
                          std::to_string(gap) + "; ";
            }
        } catch (const NonConvergent& e) {
            ok = false;
            detail += std::string(e.what()) + "; ";
        }
    }
    report(8, "cancellation robustness at t|x|, t|y| up to 50 via oracle fallback", ok, detail);
}

} // namespace

int main() {
    std::printf("acceptance suite (tolerances pinned in code)\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
