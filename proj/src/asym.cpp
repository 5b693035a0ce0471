#include "humbert/asym.hpp"

#include <cmath>
#include <sstream>

#include "humbert/errors.hpp"
#include "humbert/euler.hpp"
#include "humbert/laplace.hpp"
#include "humbert/pfq.hpp"
#include "humbert/specials.hpp"

namespace humbert {

namespace {

constexpr double kParamTol = 1e-9;

void check_not_pole(double v, const char* name) {
    if (is_nonpositive_integer(v))
        throw ParameterPole(std::string(name) + " is a non-positive integer");
}

void check_xy(double x, double y) {
    if (x == 0.0 || y == 0.0) throw RegimeError("asymptotic regimes require x != 0 and y != 0");
}

AsymValue make(int thm, int branch, std::string guard, double value, double log_scale = 0.0,
               double rel_err = 1e-2) {
    AsymValue a;
    a.value.value = value;
    a.value.log_scale = log_scale;
    a.value.method = Method::Asym;
    a.value.abs_err = std::fabs(value) * rel_err; // leading order only
    a.regime = {thm, branch, std::move(guard)};
    return a;
}

} // namespace

AsymValue phi2_asym(double beta, double beta_p, double gamma, double x, double y, double t,
                    Variant variant) {
    check_xy(x, y);
    check_not_pole(gamma, "gamma");
    check_not_pole(beta, "beta");
    check_not_pole(beta_p, "beta_p");
    check_not_pole(beta + beta_p, "beta+beta_p");
    check_not_pole(gamma - beta - beta_p, "gamma-beta-beta_p");
    if (!(t > 0)) throw DomainError("t must be positive");
    double g = gamma, b = beta, bp = beta_p;
    bool corrected = variant == Variant::Corrected;
    bool equal_neg = x < 0 && std::fabs(x - y) <= 1e-12 * std::max(std::fabs(x), std::fabs(y));
    if (equal_neg) {
        double v = gamma_fn(g) * rgamma(b + bp) * std::pow(t * std::fabs(x), b + bp - g);
        double ls = (corrected ? 1.0 : -1.0) * std::fabs(x) * t;
        return make(1, 6, "x = y < 0", v, ls);
    }
    if (x > 0 && y > 0) {
        double v = gamma_fn(g) * rgamma(g - b - bp) * std::pow(t * x, -b) * std::pow(t * y, -bp);
        return make(1, 1, "x > 0, y > 0", v);
    }
    if (x > 0 && y < 0) {
        double v = gamma_fn(g) * rgamma(bp) * std::pow(t * (std::fabs(y) + x), -b) *
                   std::pow(t * std::fabs(y), b + bp - g);
        return make(1, 2, "x > 0, y < 0", v, std::fabs(y) * t);
    }
    if (x < 0 && y > 0) {
        double v = gamma_fn(g) * rgamma(b) * std::pow(t * (y + std::fabs(x)), -bp) *
                   std::pow(t * std::fabs(x), b + bp - g);
        return make(1, 3, "x < 0, y > 0", v, std::fabs(x) * t);
    }
    // x, y < 0
    if (x < y) {
        // the printed fourth row already matches the permutation-consistent form
        double v = gamma_fn(g) * rgamma(b) * std::pow(t * std::fabs(x), b + bp - g) *
                   std::pow(t * std::fabs(x - y), -bp);
        double ls = (corrected ? 1.0 : -1.0) * std::fabs(x) * t;
        return make(1, 4, "x < y < 0", v, ls);
    }
    double last = corrected ? b : bp; // printed ends in -beta_p; permutation symmetry needs -beta
    double v = gamma_fn(g) * rgamma(bp) * std::pow(t * std::fabs(y), b + bp - g) *
               std::pow(t * std::fabs(y - x), -last);
    double ls = (corrected ? 1.0 : -1.0) * std::fabs(y) * t;
    return make(1, 5, "y < x < 0", v, ls);
}

AsymValue phi3_asym(double beta, double gamma, double x, double y, double t, Variant variant) {
    check_xy(x, y);
    check_not_pole(gamma, "gamma");
    check_not_pole(beta, "beta");
    if (!(t > 0)) throw DomainError("t must be positive");
    double g = gamma, b = beta;
    bool corrected = variant == Variant::Corrected;
    if (x > 0 && y > 0) {
        ValueEstimate j = bessel(BesselKind::J, g - b - 1.0, 2.0 * std::sqrt(y * t));
        double v = gamma_fn(g) * std::pow(t * x, -b) * std::pow(t * y, 0.5 * (1.0 + b - g)) *
                   j.value;
        return make(2, 1, "x > 0, y > 0", v);
    }
    if (x > 0 && y < 0) {
        ValueEstimate i = bessel_i_scaled(g - b - 1.0, 2.0 * std::sqrt(std::fabs(y) * t));
        double v = gamma_fn(g) * std::pow(t * x, -b) *
                   std::pow(t * std::fabs(y), 0.5 * (1.0 + b - g)) * i.value;
        return make(2, 2, "x > 0, y < 0", v, i.log_scale);
    }
    double v = gamma_fn(g) * rgamma(b) * std::pow(t * std::fabs(x), b - g) *
               std::exp(-y / std::fabs(x));
    double ls = (corrected ? 1.0 : -1.0) * std::fabs(x) * t;
    return make(2, 3, "x < 0", v, ls);
}

namespace {

// printed rows lead with Gamma(alpha); the corrected variant replaces it by
// Gamma(gamma) (the probe decides which converges; see FINDINGS.md)
double xi2_prefactor(double alpha, double beta, double gamma, bool alpha_greater, Variant variant) {
    double lead = variant == Variant::Corrected ? gamma_fn(gamma) : gamma_fn(alpha);
    if (alpha_greater) return lead * gamma_fn(alpha - beta) * rgamma(alpha);
    return lead * gamma_fn(beta - alpha) * rgamma(beta);
}

} // namespace

AsymValue xi2_asym(double alpha, double beta, double gamma, double x, double y, double t,
                   Variant variant) {
    if (!(x > 0)) throw RegimeError("Xi2 asymptotics require x > 0 (cut for x < 0)");
    if (y == 0.0) throw RegimeError("asymptotic regimes require y != 0");
    check_not_pole(gamma, "gamma");
    check_not_pole(alpha, "alpha");
    if (!(t > 0)) throw DomainError("t must be positive");
    double g = gamma;
    double ay = std::fabs(y);
    if (std::fabs(alpha - beta) < kParamTol) {
        // logarithmic branch, implemented verbatim from the display
        Xi2LogTerms lt = xi2_log_branch_terms(alpha, gamma, x, y, t);
        double bracket = lt.half_log_tx + lt.log_x_over_y - lt.psi_plus_2ce;
        double v;
        if (y > 0) {
            v = lt.outer_coeff * (lt.y_bessel_term + lt.bessel_factor * bracket);
            return make(3, 3, "y > 0, alpha = beta", v, 0.0);
        }
        v = lt.outer_coeff * lt.bessel_factor * bracket;
        return make(3, 4, "y < 0, alpha = beta", v, lt.log_scale);
    }
    bool agt = alpha > beta;
    double order_param = agt ? beta : alpha;  // the (tx)^-. exponent
    double nu = g - order_param - 1.0;
    double pref = xi2_prefactor(alpha, beta, gamma, agt, variant);
    double alg = std::pow(t * x, -order_param) * std::pow(t * ay, -0.5 * (g - order_param - 1.0));
    if (y > 0) {
        ValueEstimate j = bessel(BesselKind::J, nu, 2.0 * std::sqrt(y * t));
        double v = pref * alg * j.value;
        int branch = agt ? 1 : 5;
        return make(3, branch, agt ? "y > 0, alpha > beta" : "y > 0, alpha < beta", v);
    }
    ValueEstimate i = bessel_i_scaled(nu, 2.0 * std::sqrt(ay * t));
    double v = pref * alg * i.value;
    int branch = agt ? 2 : 6;
    return make(3, branch, agt ? "y < 0, alpha > beta" : "y < 0, alpha < beta", v, i.log_scale);
}

Xi2LogTerms xi2_log_branch_terms(double alpha, double gamma, double x, double y, double t) {
    Xi2LogTerms lt{};
    double g = gamma;
    double ay = std::fabs(y);
    double nu = g - alpha - 1.0;
    lt.outer_coeff = gamma_fn(g) * rgamma(alpha) * std::pow(t * x, -alpha) *
                     std::pow(t * ay, -0.5 * (g - alpha - 1.0));
    lt.half_log_tx = 0.5 * std::log(t * x);
    lt.log_x_over_y = std::log(x / ay);
    lt.psi_plus_2ce = digamma(alpha) + 2.0 * kEulerGamma;
    if (y > 0) {
        double z = 2.0 * std::sqrt(y * t);
        lt.y_bessel_term = 0.5 * M_PI * bessel(BesselKind::Y, nu, z).value;
        lt.bessel_factor = bessel(BesselKind::J, nu, z).value;
        lt.log_scale = 0.0;
    } else {
        ValueEstimate i = bessel_i_scaled(nu, 2.0 * std::sqrt(ay * t));
        lt.y_bessel_term = 0.0;
        lt.bessel_factor = i.value;
        lt.log_scale = i.log_scale;
    }
    return lt;
}

AsymValue phi3i_asym(double beta, double gamma, double x, double y, double t, Variant variant) {
    if (!(x > 0)) throw RegimeError("Phi3i asymptotics require x > 0");
    if (y == 0.0) throw RegimeError("asymptotic regimes require y != 0");
    check_not_pole(gamma, "gamma");
    check_not_pole(1.0 - beta, "1-beta");
    if (!(t > 0)) throw DomainError("t must be positive");
    double g = gamma, b = beta;
    bool corrected = variant == Variant::Corrected;
    if (y > 0 && std::fabs(b + g - 1.5) < 1e-12)
        throw RegimeError("beta+gamma = 3/2 sits on the regime boundary (no leading form)");
    if (y > 0 && b + g > 1.5) {
        double yx = y / x;
        double v;
        if (corrected) {
            // (g-1)/(xt) e^{y/x} (y/x)^{b-1} Gamma(1-b, y/x)
            v = (g - 1.0) / (x * t) * std::exp(yx) * std::pow(yx, b - 1.0) *
                inc_gamma_upper(1.0 - b, yx).value;
        } else {
            v = (g - 1.0) / (x * t) *
                (gamma_fn(1.0 - b) * std::pow(yx, b - 1.0) -
                 hyp1f1(1.0, 2.0 - b, yx).value / (1.0 - b));
        }
        return make(4, 1, "y > 0, beta+gamma > 3/2", v);
    }
    if (y > 0) {
        double yt = y * t;
        double v = gamma_fn(g) / std::sqrt(M_PI) * std::pow(y / x, b) *
                   std::pow(yt, -0.5 * (b + g + 0.5)) *
                   std::cos(2.0 * std::sqrt(yt) + 0.5 * M_PI * (b - g - 0.5));
        return make(4, 2, "y > 0, beta+gamma < 3/2", v);
    }
    double ayt = std::fabs(y) * t;
    double expo = corrected ? 0.5 * (b - g - 0.5) : -0.5 * (b - g - 0.5);
    double v = gamma_fn(g) / (2.0 * std::sqrt(M_PI)) * std::pow(ayt, expo) *
               std::pow(x * t, -b);
    return make(4, 3, "y < 0", v, 2.0 * std::sqrt(ayt));
}

AsymValue phi2i_asym(double beta, double beta_p, double gamma, double x, double y, double t,
                     Variant variant) {
    if (!(x > 0) || !(y > 0)) throw RegimeError("Phi2i asymptotics require x, y > 0");
    if (std::fabs(x - y) <= 1e-12 * std::max(x, y))
        throw RegimeError("x = y is the symmetric case (moment-integral route)");
    if (y > x) return phi2i_asym(beta_p, beta, gamma, y, x, t, variant); // permutation
    check_not_pole(gamma, "gamma");
    check_not_pole(gamma - beta, "gamma-beta");
    check_not_pole(1.0 - beta, "1-beta");
    if (!(t > 0)) throw DomainError("t must be positive");
    double g = gamma, b = beta, bp = beta_p;
    double Z = x * y * t / (x - y);
    ValueEstimate f22 = hyp2f2_neg(1.0 - b, bp, 2.0 - b, g - b, Z);
    double e_last = variant == Variant::Corrected ? bp : b;
    double term1 = gamma_fn(g) / ((1.0 - b) * gamma_fn(g - b)) * std::pow(x * t, bp - b) *
                   std::pow((x - y) * t, -e_last) * f22.value;
    double term2 = (g - 1.0) / (b - 1.0) / (x * t) * std::pow(x / (x - y), bp) *
                   hyp2f1(1.0 - b, bp, 2.0 - b, -y / (x - y)).value;
    return make(5, 1, "x > y > 0", term1 + term2);
}

AsymValue asym_eval(const ParamSet& params, const EvalPoint& pt, Variant variant) {
    params.validate();
    pt.validate();
    switch (params.family) {
        case Family::Phi2:
            return phi2_asym(*params.beta, *params.beta_p, *params.gamma, pt.x, pt.y, pt.t, variant);
        case Family::Phi3:
            return phi3_asym(*params.beta, *params.gamma, pt.x, pt.y, pt.t, variant);
        case Family::Xi2:
            return xi2_asym(*params.alpha, *params.beta, *params.gamma, pt.x, pt.y, pt.t, variant);
        case Family::Phi3i:
            if (std::fabs(*params.lambda - 1.0) > 1e-12)
                throw DomainError("asymptotic forms hold for lambda = 1");
            return phi3i_asym(*params.beta, *params.gamma, pt.x, pt.y, pt.t, variant);
        case Family::Phi2i:
            if (std::fabs(*params.lambda - 1.0) > 1e-12)
                throw DomainError("asymptotic forms hold for lambda = 1");
            return phi2i_asym(*params.beta, *params.beta_p, *params.gamma, pt.x, pt.y, pt.t,
                              variant);
        default:
            throw DomainError("no stated asymptotic form for family " +
                              family_name(params.family));
    }
}

// ---------------------------------------------------------------------------
// ratio probe
// ---------------------------------------------------------------------------

namespace {

ValueEstimate exact_value(const ParamSet& params, const EvalPoint& pt, ExactRoute route) {
    switch (route) {
        case ExactRoute::Oracle: {
            double scale = pt.t * std::max(std::fabs(pt.x), std::fabs(pt.y));
            int digits = 30 + static_cast<int>(1.0 * scale);
            return eval_oracle(params, pt, std::min(digits, 400));
        }
        case ExactRoute::ILT:
            return eval_ilt(params, pt);
        case ExactRoute::Euler: {
            QuadratureConfig q;
            q.levels = 14;
            q.target_tol = 1e-9;
            q.strict = false;
            return eval_euler(params, pt, q);
        }
        case ExactRoute::WIntegral: {
            QuadratureConfig q;
            q.target_tol = 1e-9;
            q.strict = false;
            InnerRoute inner = params.family == Family::Phi2i ? InnerRoute::ILT : InnerRoute::Auto;
            return eval_integrated_by_w(params, pt, q, inner);
        }
        case ExactRoute::Auto:
            break;
    }
    // route selection by family and regime
    switch (params.family) {
        case Family::Phi2:
            return eval_ilt(params, pt);
        case Family::Phi3: {
            if (pt.x < 0 || std::fabs(pt.y) * pt.t <= 900.0) return eval_ilt(params, pt);
            QuadratureConfig q;
            q.levels = 14;
            q.target_tol = 1e-9;
            q.strict = false;
            return eval_euler(params, pt, q);
        }
        case Family::Xi2: {
            QuadratureConfig q;
            q.levels = 14;
            q.target_tol = 1e-9;
            q.strict = false;
            return eval_euler(params, pt, q);
        }
        case Family::Phi2i:
        case Family::Phi3i: {
            QuadratureConfig q;
            q.target_tol = 1e-9;
            q.strict = false;
            // inner evaluator: Phi2 goes through the contour ILT; Phi3's
            // oscillation at large t needs the Euler kernel instead
            if (params.family == Family::Phi2i)
                return eval_integrated_by_w(params, pt, q, InnerRoute::ILT);
            double scale = pt.t * std::max(std::fabs(pt.x), std::fabs(pt.y));
            if (scale <= 120.0) return eval_series(params, pt);
            return eval_integrated_by_w(params, pt, q, InnerRoute::Euler);
        }
        default:
            return eval_series(params, pt);
    }
}

} // namespace

RatioProbe ratio_probe(const ParamSet& params, double x, double y,
                       const std::vector<double>& t_grid, ExactRoute route, Variant variant) {
    RatioProbe probe;
    probe.t_grid = t_grid;
    probe.ratios.resize(t_grid.size(), 0.0);
    probe.exact_log10.resize(t_grid.size(), 0.0);
    probe.asym_log10.resize(t_grid.size(), 0.0);
    probe.valid.resize(t_grid.size(), false);
    probe.notes.resize(t_grid.size());
    const double l10 = std::log(10.0);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        if (i > 0 && !(t > t_grid[i - 1])) throw DomainError("t_grid must be strictly increasing");
        EvalPoint pt{x, y, t};
        try {
            AsymValue a = asym_eval(params, pt, variant);
            probe.branch_guard = a.regime.guard;
            ValueEstimate e = exact_value(params, pt, route);
            if (e.rel_err() > 1e-3 || e.value == 0.0)
                throw NonConvergent("exact route error estimate too large for a ratio");
            double le = std::log(std::fabs(e.value)) + e.log_scale;
            double la = std::log(std::fabs(a.value.value)) + a.value.log_scale;
            double mag = std::exp(le - la);
            double sign = ((e.value > 0) == (a.value.value > 0)) ? 1.0 : -1.0;
            probe.ratios[i] = sign * mag;
            probe.exact_log10[i] = le / l10;
            probe.asym_log10[i] = la / l10;
            probe.valid[i] = std::isfinite(probe.ratios[i]) && a.value.value != 0.0 &&
                             e.value != 0.0;
        } catch (const Error& err) {
            probe.notes[i] = err.what();
        }
    }
    // least-squares drift of log|ratio - 1| against log t
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!probe.valid[i]) continue;
        double d = std::fabs(probe.ratios[i] - 1.0);
        if (d <= 0) continue;
        double lx = std::log(t_grid[i]), ly = std::log(d);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n >= 2) {
        probe.trend = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        probe.trend_defined = true;
    }
    return probe;
}

namespace {

// decimal literal from sign and log10 magnitude, valid beyond double range
std::string format_log10(double sign_carrier, double lg10) {
    if (!std::isfinite(lg10)) return "0";
    double e = std::floor(lg10);
    double mant = std::pow(10.0, lg10 - e);
    std::ostringstream os;
    os.precision(12);
    os << (sign_carrier < 0 ? "-" : "") << mant << "e" << static_cast<long long>(e);
    return os.str();
}

} // namespace

double antinode_t(double phase_shift, double y, double t0) {
    if (!(y > 0) || !(t0 > 0)) throw DomainError("antinode_t needs y > 0 and t0 > 0");
    double k = std::round((2.0 * std::sqrt(y * t0) + phase_shift) / M_PI);
    double root = (k * M_PI - phase_shift) / 2.0;
    if (root <= 0) root = (M_PI - phase_shift) / 2.0;
    return root * root / y;
}

std::vector<double> antinode_grid_j(double nu, double y, const std::vector<double>& t0s) {
    std::vector<double> out;
    double shift = -(0.5 * nu * M_PI + 0.25 * M_PI);
    for (double t0 : t0s) out.push_back(antinode_t(shift, y, t0));
    return out;
}

std::string RatioProbe::to_csv() const {
    std::ostringstream os;
    os << "t,exact,asym,ratio,branch\n";
    os.precision(17);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        os << t_grid[i] << "," << format_log10(ratios[i], exact_log10[i]) << ","
           << format_log10(1.0, asym_log10[i]) << "," << ratios[i] << "," << branch_guard << "\n";
    }
    return os.str();
}

} // namespace humbert
