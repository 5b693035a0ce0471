#include "humbert/euler.hpp"

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/laplace.hpp"
#include "humbert/pfq.hpp"
#include "humbert/specials.hpp"

namespace humbert {

namespace {

constexpr double kCutGuard = 1e-12;

// evaluate one convolution factor at argument w (the power weight is handled
// by the quadrature caller)
double factor_value(const ConvolutionFactor& f, double w) {
    switch (f.upper.size()) {
        case 0: {
            ValueEstimate v = hyp0f1(f.lower, w);
            return v.real_value();
        }
        case 1:
            return hyp1f1(f.upper[0], f.lower, w).value;
        case 2:
            return hyp2f1(f.upper[0], f.upper[1], f.lower, w).value;
        default:
            throw DomainError("convolution factor with more than two upper parameters");
    }
}

void check_eps(double eps, double gamma) {
    if (!(eps > 0.0) || !(eps < gamma))
        throw DomainError("splitting parameter must satisfy 0 < eps < gamma");
}

void check_branch_cut(const ParamSet& params, const EvalPoint& pt) {
    bool x_cut = params.family == Family::Xi1 || params.family == Family::Xi2 ||
                 params.family == Family::F3;
    bool y_cut = params.family == Family::F3;
    if (x_cut && !(pt.t * pt.x > -1.0 + kCutGuard))
        throw DomainError("evaluation point on or beyond the x branch cut (t x <= -1)");
    if (y_cut && !(pt.t * pt.y > -1.0 + kCutGuard))
        throw DomainError("evaluation point on or beyond the y branch cut (t y <= -1)");
}

} // namespace

ConvolutionKernel ConvolutionKernel::make(const ParamSet& params, double eps) {
    params.validate();
    double g = *params.gamma;
    check_eps(eps, g);
    ConvolutionKernel k;
    k.family = params.family;
    k.epsilon = eps;
    k.f1.power_exponent = g - eps - 1.0;
    k.f1.lower = g - eps;
    k.f2.power_exponent = eps - 1.0;
    k.f2.lower = eps;
    switch (params.family) {
        case Family::Phi3:
            k.f1.upper = {*params.beta};
            k.f2.upper = {};
            break;
        case Family::Phi2:
            k.f1.upper = {*params.beta};
            k.f2.upper = {*params.beta_p};
            break;
        case Family::Xi2:
            k.f1.upper = {*params.alpha, *params.beta};
            k.f2.upper = {};
            break;
        case Family::Xi1:
            k.f1.upper = {*params.alpha, *params.beta};
            k.f2.upper = {*params.beta_p};
            break;
        case Family::F3:
            k.f1.upper = {*params.alpha, *params.beta};
            k.f2.upper = {*params.alpha_p, *params.beta_p};
            break;
        default:
            throw DomainError("no convolution representation for family " +
                              family_name(params.family));
    }
    if (!(k.f1.power_exponent > -1.0) || !(k.f2.power_exponent > -1.0))
        throw DomainError("endpoint exponents must stay integrable");
    return k;
}

ValueEstimate eval_euler(const ParamSet& params, const EvalPoint& pt, const QuadratureConfig& q) {
    params.validate();
    return eval_euler(params, pt, 0.5 * *params.gamma, q);
}

ValueEstimate eval_euler(const ParamSet& params, const EvalPoint& pt, double eps,
                         const QuadratureConfig& q) {
    pt.validate();
    q.validate();
    check_branch_cut(params, pt);
    ConvolutionKernel k = ConvolutionKernel::make(params, eps);
    double g = *params.gamma;
    double pref = gamma_fn(g) * rgamma(g - eps) * rgamma(eps);
    double tx = pt.t * pt.x, ty = pt.t * pt.y;
    ValueEstimate r;
    r.method = Method::Euler;
    if (q.scheme == QuadratureConfig::Scheme::double_exponential) {
        double achieved = 0;
        long nodes = 0;
        double val = tanh_sinh_01<double>(
            [&](double u, double omu) {
                return std::pow(u, k.f1.power_exponent) * std::pow(omu, k.f2.power_exponent) *
                       factor_value(k.f1, -tx * u) * factor_value(k.f2, -ty * omu);
            },
            q.target_tol, q.levels, achieved, nodes);
        r.value = pref * val;
        r.nodes_used = nodes;
        r.abs_err = std::fabs(r.value) * std::max(achieved, 1e-14);
        if (q.strict && achieved > q.target_tol)
            throw QuadratureNotConverged("Eulerian quadrature levels disagree beyond target_tol");
    } else {
        // Gauss-Jacobi with the endpoint exponents folded into the weights
        auto run = [&](int n) {
            JacobiRule rule = gauss_jacobi_01(n, k.f1.power_exponent, k.f2.power_exponent);
            double s = 0;
            for (std::size_t i = 0; i < rule.x.size(); ++i) {
                double u = rule.x[i];
                s += rule.w[i] * factor_value(k.f1, -tx * u) * factor_value(k.f2, -ty * (1.0 - u));
            }
            return s;
        };
        int n = std::max(8, q.nodes);
        double coarse = run(n);
        double fine = run(n + n / 2);
        r.value = pref * fine;
        r.nodes_used = n + n + n / 2;
        r.abs_err = std::fabs(pref) * std::fabs(fine - coarse) + std::fabs(r.value) * 1e-14;
        if (q.strict && std::fabs(fine - coarse) > q.target_tol * std::fabs(fine) + q.target_tol)
            throw QuadratureNotConverged("Gauss-Jacobi refinement disagrees beyond target_tol");
    }
    return r;
}

ValueEstimate eval_semi_infinite(const ParamSet& params, const EvalPoint& pt,
                                 const QuadratureConfig& q) {
    params.validate();
    pt.validate();
    q.validate();
    double X = pt.X(), Y = pt.Y();
    double a = *params.alpha;
    if (!(a > 0)) throw DomainError("semi-infinite representation requires a > 0");
    std::vector<double> up_x, up_y;
    double lo_x = *params.gamma, lo_y = *params.gamma_p;
    switch (params.family) {
        case Family::F2:
            up_x = {*params.beta};
            up_y = {*params.beta_p};
            if (!(X < 1.0) || !(Y < 1.0) || !(std::max(X, 0.0) + std::max(Y, 0.0) < 1.0))
                throw DomainError("F2 integrand does not decay: need max(tx,ty)<1 jointly");
            break;
        case Family::Psi1:
            up_x = {*params.beta};
            if (!(X < 1.0)) throw DomainError("Psi1 integrand does not decay: need tx < 1");
            break;
        case Family::Psi2:
            break;
        default:
            throw DomainError("semi-infinite route covers F2, Psi1, Psi2 only");
    }
    // combine e^-u u^(a-1) with possibly huge 1F1/0F1 factors in log space
    auto factor = [&](const std::vector<double>& up, double lo, double w) -> ValueEstimate {
        if (up.empty()) return hyp0f1(lo, w);
        return hyp1f1_scaled(up[0], lo, w);
    };
    double achieved = 0;
    long nodes = 0;
    double val = exp_sinh_0inf<double>(
        [&](double u) {
            ValueEstimate f1 = factor(up_x, lo_x, X * u);
            ValueEstimate f2 = factor(up_y, lo_y, Y * u);
            double lg = -u + (a - 1.0) * std::log(u) + f1.log_scale + f2.log_scale;
            if (lg < -745.0) return 0.0; // decays past any representable scale
            return std::exp(lg) * f1.value * f2.value;
        },
        q.target_tol, q.levels + 1, achieved, nodes);
    ValueEstimate r;
    r.value = val * rgamma(a);
    r.method = Method::Euler;
    r.nodes_used = nodes;
    r.abs_err = std::fabs(r.value) * std::max(achieved, 1e-14);
    if (q.strict && achieved > q.target_tol)
        throw QuadratureNotConverged("semi-infinite quadrature stalled");
    return r;
}

namespace {

ValueEstimate inner_eval(const ParamSet& inner, const EvalPoint& pt, InnerRoute route) {
    switch (route) {
        case InnerRoute::Auto:
        case InnerRoute::Series:
            return eval_series(inner, pt);
        case InnerRoute::Oracle:
            return eval_oracle(inner, pt);
        case InnerRoute::ILT:
            return eval_ilt(inner, pt);
        case InnerRoute::Euler: {
            QuadratureConfig q;
            q.levels = 14;
            q.target_tol = 1e-8;
            q.strict = false; // oscillatory kernels plateau at the double floor
            return eval_euler(inner, pt, q);
        }
    }
    throw DomainError("unknown inner route");
}

} // namespace

ValueEstimate eval_integrated_by_w(const ParamSet& params, const EvalPoint& pt,
                                   const QuadratureConfig& q, InnerRoute inner) {
    params.validate();
    pt.validate();
    q.validate();
    if (params.family != Family::Phi2i && params.family != Family::Phi3i)
        throw DomainError("w-integral route covers the integrated families only");
    if (std::fabs(*params.lambda - 1.0) > 1e-12)
        throw DomainError("w-integral identity requires lambda = 1");
    ParamSet plain = params.family == Family::Phi2i
                         ? ParamSet::phi2(*params.beta, *params.beta_p, *params.gamma)
                         : ParamSet::phi3(*params.beta, *params.gamma);
    // log-scaled trapezoid accumulation over tanh-sinh nodes: inner values may
    // carry exponential scale factors at large t
    double acc = 0.0, scale = 0.0; // running sum = acc * exp(scale)
    auto add_scaled = [&](double v, double ls) {
        if (v == 0.0) return;
        if (ls > scale + 40.0) {
            acc = acc * std::exp(scale - ls) + v;
            scale = ls;
        } else {
            acc += v * std::exp(ls - scale);
        }
    };
    double prev = 0.0, prev_scale = 0.0;
    double achieved = 1.0;
    long nodes = 0;
    long inner_terms = 0;
    for (int level = 0; level <= q.levels; ++level) {
        auto row = tanh_sinh_row<double>(level, 20.0);
        if (level > 0) acc *= 0.5;
        double arg_mag = std::max(std::fabs(pt.x), std::fabs(pt.y)) * pt.t;
        for (const auto& n : row) {
            auto piece = [&](double w) {
                EvalPoint scaled{pt.x, pt.y, pt.t * w};
                // near w = 0 the scaled arguments collapse; the series is
                // exact and cheap there whatever route was requested
                InnerRoute route = (arg_mag * w < 0.5) ? InnerRoute::Series : inner;
                ValueEstimate v = inner_eval(plain, scaled, route);
                inner_terms += v.terms_used + v.nodes_used;
                add_scaled(n.w * v.value, v.log_scale);
            };
            piece(n.u);
            ++nodes;
            if (!n.center) {
                piece(n.omu);
                ++nodes;
            }
        }
        if (level >= 2) {
            double diff = std::fabs(acc - prev * std::exp(prev_scale - scale));
            achieved = diff / (std::fabs(acc) + 1e-300);
            if (achieved < q.target_tol) break;
        }
        prev = acc;
        prev_scale = scale;
    }
    ValueEstimate r;
    r.value = acc;
    r.log_scale = scale;
    r.method = Method::Euler;
    r.nodes_used = nodes;
    r.terms_used = inner_terms;
    r.abs_err = std::fabs(acc) * std::max(achieved, 1e-13);
    if (q.strict && achieved > 10 * q.target_tol)
        throw QuadratureNotConverged("w-integral refinement stalled");
    return r;
}

double corollary2_check(double beta, double beta_p, double gamma, double lambda, double mu,
                        double x, const QuadratureConfig& q) {
    if (!(x > 0) || !(lambda > 0) || !(mu > 0))
        throw DomainError("corollary2_check requires x, lambda, mu > 0");
    ParamSet phi2 = ParamSet::phi2(beta, beta_p, gamma);
    double achieved = 0;
    long nodes = 0;
    double lhs = tanh_sinh_01<double>(
        [&](double w, double omw) {
            double val = eval_series(phi2, EvalPoint{x * w, x * w, 1.0}).value;
            return std::pow(w, lambda - 1.0) * std::pow(omw, mu - 1.0) * val;
        },
        q.target_tol, q.levels, achieved, nodes);
    double bpref = gamma_fn(lambda) * gamma_fn(mu) / gamma_fn(lambda + mu);
    double rhs = bpref * hyp2f2_neg(beta + beta_p, lambda, mu + lambda, gamma, x).value;
    return std::fabs(lhs - rhs) / std::fabs(rhs);
}

ValueEstimate eval_kdf_euler(const KdFSpec& spec, const EvalPoint& pt, double eps,
                             const QuadratureConfig& q) {
    spec.validate();
    pt.validate();
    q.validate();
    check_eps(eps, spec.gamma);
    double g = spec.gamma;
    double tx = pt.t * pt.x, ty = pt.t * pt.y;
    auto side = [&](const std::vector<double>& up, const std::vector<double>& lo, double extra,
                    double w) -> double {
        if (up.size() == 2 && lo.empty()) return hyp2f1(up[0], up[1], extra, w).value;
        std::vector<double> lower = lo;
        lower.push_back(extra);
        return hyp_pfq(Pfq{up, lower, w}).value;
    };
    double pref = gamma_fn(g) * rgamma(g - eps) * rgamma(eps);
    double achieved = 0;
    long nodes = 0;
    double val = tanh_sinh_01<double>(
        [&](double u, double omu) {
            return std::pow(u, g - eps - 1.0) * std::pow(omu, eps - 1.0) *
                   side(spec.upper_x, spec.lower_x, g - eps, -tx * u) *
                   side(spec.upper_y, spec.lower_y, eps, -ty * omu);
        },
        q.target_tol, q.levels, achieved, nodes);
    ValueEstimate r;
    r.value = pref * val;
    r.method = Method::Euler;
    r.nodes_used = nodes;
    r.abs_err = std::fabs(r.value) * std::max(achieved, 1e-14);
    if (q.strict && achieved > q.target_tol)
        throw QuadratureNotConverged("Kampe de Feriet quadrature stalled");
    return r;
}

} // namespace humbert
