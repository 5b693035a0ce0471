#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "humbert/bigfloat.hpp"
#include "humbert/errors.hpp"

namespace humbert {

/// Quadrature scheme selector for the Eulerian representations.
struct QuadratureConfig {
    enum class Scheme { double_exponential, gauss_jacobi };
    Scheme scheme = Scheme::double_exponential;
    int levels = 12;        // refinement depth for the DE schemes
    int nodes = 64;         // gauss_jacobi node count
    double target_tol = 1e-11;
    /// strict: refinement ending above target_tol throws; otherwise the
    /// achieved level difference is reported through abs_err only.
    bool strict = true;

    void validate() const {
        if (!(target_tol > 0)) throw DomainError("QuadratureConfig.target_tol must be positive");
    }
};

namespace quad_detail {

inline double pi_of(double) { return 3.14159265358979323846264338327950288; }
inline BigFloat pi_of(const BigFloat&) { return bf_pi(); }
inline double exp_of(double v) { return std::exp(v); }
inline BigFloat exp_of(const BigFloat& v) { return exp(v); }
inline double log10_mag(double v) {
    return (v == 0.0 || !std::isfinite(v)) ? -1e9 : std::log10(std::fabs(v));
}
inline double log10_mag(const BigFloat& v) {
    return v.is_zero() ? -1e9 : v.log10_abs();
}
inline int digits_of(double) { return 16; }
inline int digits_of(const BigFloat&) { return BigFloat::default_digits(); }
inline bool zero_of(double v) { return v == 0.0; }
inline bool zero_of(const BigFloat& v) { return v.is_zero(); }
inline bool finite_of(double v) { return std::isfinite(v); }
inline bool finite_of(const BigFloat&) { return true; }

} // namespace quad_detail

template <typename S>
struct DENode {
    S u;    // abscissa in (0,1)
    S omu;  // 1 - u, computed without cancellation
    S w;    // weight including the step h
    bool center; // k == 0 node (u == 1/2), not part of a symmetric pair
};

namespace quad_detail {

template <typename S>
std::vector<DENode<S>> build_tanh_sinh_row(int level, double digit_budget) {
    std::vector<DENode<S>> row;
    S pi_half = pi_of(S(1)) / S(2);
    double h = std::ldexp(1.0, -level);
    long kstep = level == 0 ? 1 : 2;
    for (long k = level == 0 ? 0 : 1;; k += kstep) {
        double t = k * h;
        if (t > 7.0) break;
        S et = exp_of(S(t));
        S emt = S(1) / et;
        S st = S(0.5) * (et - emt);
        S ct = S(0.5) * (et + emt);
        S w2 = pi_half * st;
        S em2w = exp_of(S(-2) * w2);
        S u = S(1) / (S(1) + em2w);
        S omu = em2w / (S(1) + em2w);
        S chw = S(0.5) * (exp_of(w2) + exp_of(-w2));
        S wgt = pi_half * ct / (S(2) * chw * chw) * S(h);
        // stop once even a 1/u-singular integrand could not contribute
        if (zero_of(omu) || log10_mag(wgt) - log10_mag(omu) < -(digit_budget + 6)) break;
        row.push_back({u, omu, wgt, k == 0});
    }
    return row;
}

} // namespace quad_detail

/// tanh-sinh abscissas at spacing h = 2^-level; level 0 yields k = 0,1,2,...,
/// higher levels only the odd multiples (trapezoid refinement).
template <typename S>
std::vector<DENode<S>> tanh_sinh_row(int level, double digit_budget) {
    return quad_detail::build_tanh_sinh_row<S>(level, digit_budget);
}

/// BigFloat rows are cached per (working precision, level): every node costs
/// several big exponentials to construct.
template <>
std::vector<DENode<BigFloat>> tanh_sinh_row<BigFloat>(int level, double digit_budget);

/// Integrate f(u, 1-u) over (0,1); endpoint algebraic singularities milder
/// than u^-1 or (1-u)^-1 are handled by the substitution. Refines until two
/// successive levels agree to target_tol (relative); `achieved` reports the
/// final level-to-level difference.
template <typename S, typename F>
S tanh_sinh_01(F&& f, double target_tol, int max_level, double& achieved, long& nodes_used) {
    using namespace quad_detail;
    double budget = digits_of(S(1)) + 4.0;
    S sum{};
    S prev{};
    nodes_used = 0;
    achieved = 1.0;
    for (int level = 0; level <= max_level; ++level) {
        auto row = tanh_sinh_row<S>(level, budget);
        S partial{};
        for (const auto& n : row) {
            if (n.center) {
                partial += n.w * f(n.u, n.omu);
                ++nodes_used;
            } else {
                partial += n.w * (f(n.u, n.omu) + f(n.omu, n.u));
                nodes_used += 2;
            }
        }
        sum = level == 0 ? partial : sum * S(0.5) + partial;
        if (level >= 2) {
            S diff = sum - prev;
            achieved = std::pow(10.0, log10_mag(diff) - log10_mag(sum));
            if (achieved < target_tol) return sum;
        }
        prev = sum;
    }
    return sum;
}

/// Integrate f(s) over (0, inf). Requires f integrable at 0 (milder than 1/s)
/// and decaying at infinity at least exponentially past some point.
template <typename S, typename F>
S exp_sinh_0inf(F&& f, double target_tol, int max_level, double& achieved, long& nodes_used) {
    using namespace quad_detail;
    double budget = digits_of(S(1)) + 4.0;
    S pi_half = pi_of(S(1)) / S(2);
    S sum{};
    S prev{};
    nodes_used = 0;
    achieved = 1.0;
    auto node_value = [&](double t) -> S {
        S et = exp_of(S(t));
        S st = S(0.5) * (et - S(1) / et);
        S ct = S(0.5) * (et + S(1) / et);
        S s = exp_of(pi_half * st);
        if (!finite_of(s)) return S{};
        S w = pi_half * ct * s;
        return w * f(s);
    };
    for (int level = 0; level <= max_level; ++level) {
        double h = std::ldexp(1.0, -level);
        long kstep = level == 0 ? 1 : 2;
        S partial{};
        double running_peak = -1e9;
        for (int dir = 0; dir < 2; ++dir) {
            for (long k = level == 0 ? (dir == 0 ? 0 : 1) : 1;; k += kstep) {
                double t = (dir == 0 ? 1.0 : -1.0) * static_cast<double>(k) * h;
                if (std::fabs(t) > 7.0) break;
                S piece = node_value(t);
                ++nodes_used;
                if (!finite_of(piece)) break; // abscissa or integrand out of range
                partial += piece;
                double m = log10_mag(piece);
                running_peak = std::max(running_peak, m);
                if (std::fabs(t) > 1.0 && m < running_peak - budget) break;
            }
        }
        partial = partial * S(h);
        sum = level == 0 ? partial : sum * S(0.5) + partial;
        if (level >= 2) {
            S diff = sum - prev;
            achieved = std::pow(10.0, log10_mag(diff) - log10_mag(sum));
            if (achieved < target_tol) return sum;
        }
        prev = sum;
    }
    return sum;
}

/// Gauss-Jacobi rule on (-1,1) for weight (1-x)^a (1+x)^b.
struct JacobiRule {
    std::vector<double> x;
    std::vector<double> w;
};

JacobiRule gauss_jacobi(int n, double a, double b);

/// Rule for int_0^1 u^p (1-u)^q g(u) du = sum w_i g(u_i); the algebraic
/// endpoint factors are folded into the weights.
JacobiRule gauss_jacobi_01(int n, double p, double q);

} // namespace humbert
