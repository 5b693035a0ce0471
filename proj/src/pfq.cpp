#include "humbert/pfq.hpp"

#include <algorithm>
#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/specials.hpp"

namespace humbert {

void Pfq::validate() const {
    for (double b : lower) {
        if (is_nonpositive_integer(b))
            throw SingularParameter("pFq lower parameter is a non-positive integer");
    }
    if (upper.size() > lower.size() + 1)
        throw DomainError("pFq with p > q+1 diverges for z != 0");
}

namespace {

bool upper_terminates(const std::vector<double>& upper, long k) {
    // series truncates when some upper parameter equals -j with j < k
    for (double a : upper) {
        if (is_nonpositive_integer(a) && -a < static_cast<double>(k)) return true;
    }
    return false;
}

struct SumOutcome {
    double value = 0;
    double max_partial = 0;
    double last_term = 0;
    long terms = 0;
    bool converged = false;
};

SumOutcome sum_pfq_double(const Pfq& f, const Precision& prec) {
    SumOutcome out;
    double term = 1.0, sum = 1.0, maxp = 1.0;
    int quiet = 0;
    long k = 0;
    for (k = 0; k < prec.max_terms; ++k) {
        double num = 1.0, den = 1.0;
        for (double a : f.upper) num *= a + static_cast<double>(k);
        for (double b : f.lower) den *= b + static_cast<double>(k);
        term *= num / den * f.z / (static_cast<double>(k) + 1.0);
        sum += term;
        maxp = std::max(maxp, std::fabs(sum));
        if (!std::isfinite(sum) || !std::isfinite(term)) break; // overflow = divergence here
        if (term == 0.0 && upper_terminates(f.upper, k + 2)) {
            out.converged = true;
            break;
        }
        if (std::fabs(term) < prec.rel_tol * std::fabs(sum) + 1e-305) {
            if (++quiet >= 3) {
                out.converged = true;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    out.value = sum;
    out.max_partial = maxp;
    out.last_term = term;
    out.terms = k;
    return out;
}

ValueEstimate finish(const SumOutcome& s, const Precision& prec) {
    ValueEstimate r;
    r.value = s.value;
    r.abs_err = std::fabs(s.last_term) + s.max_partial * 1e-16;
    r.method = Method::Series;
    r.terms_used = s.terms;
    if (!s.converged)
        throw NonConvergent("pFq series did not converge in " + std::to_string(prec.max_terms) +
                            " terms");
    return r;
}

} // namespace

BigFloat hyp_pfq_big(const std::vector<BigFloat>& upper, const std::vector<BigFloat>& lower,
                     const BigFloat& z, long max_terms) {
    BigFloat term(1), sum(1);
    double peak = 0.0;
    int digits = BigFloat::default_digits();
    int quiet = 0;
    for (long k = 0; k < max_terms; ++k) {
        BigFloat kk(k);
        BigFloat num(1), den(1);
        for (const auto& a : upper) num *= a + kk;
        for (const auto& b : lower) den *= b + kk;
        term = term * num * z / (den * BigFloat(k + 1));
        sum += term;
        if (term.is_zero()) return sum;
        peak = std::max(peak, sum.log10_abs());
        if (term.log10_abs() < sum.log10_abs() - digits - 2) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NonConvergent("pFq high-precision series did not converge");
}

namespace {

ValueEstimate hyp_pfq_impl(const Pfq& f, const Precision& prec, bool allow_fallback) {
    prec.validate();
    f.validate();
    if (f.z == 0.0) {
        ValueEstimate r;
        r.value = 1.0;
        r.method = Method::Series;
        return r;
    }
    // stable 1F1 path: M(a;b;-x) = e^-x M(b-a;b;x)
    if (allow_fallback && f.upper.size() == 1 && f.lower.size() == 1 && f.z < 0.0) {
        Pfq g{{f.lower[0] - f.upper[0]}, {f.lower[0]}, -f.z};
        if (!(is_nonpositive_integer(f.upper[0]))) { // keep terminating series direct
            ValueEstimate r = hyp_pfq_impl(g, prec, true);
            double s = std::exp(f.z);
            r.value *= s;
            r.abs_err *= s;
            return r;
        }
    }
    SumOutcome s = sum_pfq_double(f, prec);
    double cancel = s.max_partial / (std::fabs(s.value) + 1e-300);
    if (cancel > 1e8 || !s.converged) {
        if (!allow_fallback) {
            if (!s.converged)
                throw NonConvergent("pFq series: term ratio stayed above 1 within max_terms");
            ValueEstimate r;
            r.value = s.value;
            r.abs_err = s.max_partial * 1e-16 + std::fabs(s.last_term);
            r.method = Method::Series;
            r.terms_used = s.terms;
            r.degraded = true;
            return r;
        }
        int digits = prec.working_digits;
        int needed = 18 + static_cast<int>(std::ceil(std::log10(cancel + 10.0))) + 8;
        digits = std::max(digits, needed);
        PrecisionGuard guard(digits);
        std::vector<BigFloat> up(f.upper.begin(), f.upper.end());
        std::vector<BigFloat> lo(f.lower.begin(), f.lower.end());
        BigFloat v = hyp_pfq_big(up, lo, BigFloat(f.z), prec.max_terms);
        ValueEstimate r;
        r.value = v.to_double();
        r.abs_err = std::fabs(r.value) * std::pow(10.0, -(digits - 16 - std::log10(cancel + 10.0)));
        r.method = Method::Oracle;
        r.terms_used = s.terms;
        return r;
    }
    return finish(s, prec);
}

} // namespace

ValueEstimate hyp_pfq(const Pfq& f, const Precision& prec) { return hyp_pfq_impl(f, prec, true); }

ValueEstimate hyp_pfq_fixed(const Pfq& f, const Precision& prec) {
    return hyp_pfq_impl(f, prec, false);
}

ValueEstimate hyp1f1(double a, double b, double z, const Precision& prec) {
    // large negative argument: the Kummer-transformed series would overflow,
    // and the algebraic expansion is already exact to ~e^z there
    if (z < -60.0 && !is_nonpositive_integer(a)) {
        double Z = -z;
        if (is_nonpositive_integer(b - a)) {
            // e^z times a terminating polynomial: exponentially small
            ValueEstimate r;
            r.value = 0.0;
            r.abs_err = std::exp(std::max(z + 700.0, -700.0)) * 1e-300;
            r.method = Method::Asym;
            return r;
        }
        double term = 1.0, sum = 1.0, smallest = 1e300;
        for (long k = 1; k <= 60; ++k) {
            term *= (a + k - 1.0) * (a - b + k) / (static_cast<double>(k) * Z);
            if (std::fabs(term) > smallest) break;
            smallest = std::fabs(term);
            sum += term;
        }
        ValueEstimate r;
        r.value = gamma_fn(b) * rgamma(b - a) * std::pow(Z, -a) * sum;
        r.abs_err = std::fabs(gamma_fn(b) * rgamma(b - a)) * std::pow(Z, -a) *
                        (smallest + 1e-15) +
                    std::fabs(r.value) * 1e-14;
        r.method = Method::Asym;
        return r;
    }
    return hyp_pfq({{a}, {b}, z}, prec);
}

ValueEstimate hyp1f1_scaled(double a, double b, double z, const Precision& prec) {
    if (z <= 200.0) return hyp1f1(a, b, z, prec);
    // e^z z^(a-b) Gamma(b)/Gamma(a) * sum_k (b-a)_k (1-a)_k / (k! z^k)
    if (is_nonpositive_integer(a)) return hyp1f1(a, b, z, prec); // polynomial
    double term = 1.0, sum = 1.0, smallest = 1e300;
    for (long k = 1; k <= 60; ++k) {
        term *= (b - a + k - 1.0) * (1.0 - a + k - 1.0) / (static_cast<double>(k) * z);
        if (std::fabs(term) > smallest) break;
        smallest = std::fabs(term);
        sum += term;
    }
    ValueEstimate r;
    double lg_b = std::lgamma(b), lg_a = std::lgamma(a);
    double sign = (std::tgamma(b) < 0 ? -1.0 : 1.0) * (std::tgamma(a) < 0 ? -1.0 : 1.0);
    if (b > 170.0 || a > 170.0) sign = 1.0; // tgamma overflow: orders here are positive anyway
    r.value = sign * std::exp(lg_b - lg_a + (a - b) * std::log(z)) * sum;
    r.log_scale = z;
    r.abs_err = std::fabs(r.value) * (smallest + 1e-14);
    r.method = Method::Asym;
    return r;
}

ValueEstimate hyp2f1_continued(double a, double b, double c, double x, const QuadratureConfig& q) {
    if (!(c > b) || !(b > 0)) throw DomainError("hyp2f1_continued requires c > b > 0");
    if (x < 0) throw DomainError("hyp2f1_continued requires x >= 0");
    q.validate();
    double pref = gamma_fn(c) * rgamma(b) * rgamma(c - b);
    double achieved = 0;
    long nodes = 0;
    double val = tanh_sinh_01<double>(
        [&](double u, double omu) {
            return std::pow(u, b - 1.0) * std::pow(omu, c - b - 1.0) * std::pow(1.0 + u * x, -a);
        },
        q.target_tol, q.levels, achieved, nodes);
    ValueEstimate r;
    r.value = pref * val;
    r.abs_err = std::fabs(r.value) * std::max(achieved, 1e-15);
    r.method = Method::Euler;
    r.nodes_used = nodes;
    if (achieved > 100 * q.target_tol)
        throw QuadratureNotConverged("hyp2f1_continued quadrature stalled");
    return r;
}

namespace {

// Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)) for z < 0
ValueEstimate hyp2f1_pfaff(double a, double b, double c, double z) {
    double w = z / (z - 1.0);
    Precision prec;
    prec.max_terms = 2000000;
    ValueEstimate r = hyp_pfq({{a, c - b}, {c}, w}, prec);
    double s = std::pow(1.0 - z, -a);
    r.value *= s;
    r.abs_err *= s;
    return r;
}

} // namespace

ValueEstimate hyp2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c)) throw SingularParameter("2F1 lower parameter pole");
    if (z == 0.0) {
        ValueEstimate r;
        r.value = 1.0;
        return r;
    }
    if (z > 0 && z < 1.0) return hyp_pfq({{a, b}, {c}, z});
    if (z >= 1.0) throw DomainError("2F1 on the cut [1, inf)");
    double x = -z;
    // terminating series stays exact on any branch
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return hyp_pfq({{a, b}, {c}, z});
    if (c > b && b > 0) return hyp2f1_continued(a, b, c, x);
    if (c > a && a > 0) return hyp2f1_continued(b, a, c, x);
    return hyp2f1_pfaff(a, b, c, z);
}

BigFloat hyp2f1_neg_big(double a, double b, double c, const BigFloat& x) {
    if (x.sign() < 0) throw DomainError("hyp2f1_neg_big requires x >= 0");
    if (x.is_zero()) return BigFloat(1);
    // Pfaff series: (1+x)^-a 2F1(a, c-b; c; x/(1+x)); geometric in w, so it
    // stays the cheap path until w approaches 1
    BigFloat w = x / (BigFloat(1) + x);
    if (w.to_double() <= 0.97 || !(c > b && b > 0) || is_nonpositive_integer(a)) {
        std::vector<BigFloat> up{BigFloat(a), BigFloat(c - b)};
        std::vector<BigFloat> lo{BigFloat(c)};
        BigFloat series = hyp_pfq_big(up, lo, w, 2000000);
        return pow(BigFloat(1) + x, BigFloat(-a)) * series;
    }
    // near-cut arguments: Euler integral in BigFloat
    BigFloat pref = gamma_big(BigFloat(c)) / (gamma_big(BigFloat(b)) * gamma_big(BigFloat(c - b)));
    double achieved = 0;
    long nodes = 0;
    BigFloat bb(b), cc(c), aa(a);
    BigFloat val = tanh_sinh_01<BigFloat>(
        [&](const BigFloat& u, const BigFloat& omu) {
            return pow(u, bb - BigFloat(1)) * pow(omu, cc - bb - BigFloat(1)) *
                   pow(BigFloat(1) + u * x, -aa);
        },
        std::pow(10.0, -BigFloat::default_digits() + 4), 13, achieved, nodes);
    return pref * val;
}

// ---------------------------------------------------------------------------
// 2F2 large negative argument
// ---------------------------------------------------------------------------

ValueEstimate hyp2f2_asym_neg(double a1, double a2, double b1, double b2, double Z, int kmax) {
    if (!(Z > 0)) throw DomainError("hyp2f2_asym_neg requires Z > 0");
    double diff = a2 - a1;
    ValueEstimate r;
    r.method = Method::Asym;
    if (std::fabs(diff - std::round(diff)) < 1e-9 && std::fabs(diff) > 0.5) {
        // integer offset: evaluate at nudged parameters and average
        double h = 1e-5;
        ValueEstimate lo = hyp2f2_asym_neg(a1 - h, a2, b1, b2, Z, kmax);
        ValueEstimate hi = hyp2f2_asym_neg(a1 + h, a2, b1, b2, Z, kmax);
        r.value = 0.5 * (lo.value + hi.value);
        r.abs_err = 0.5 * (lo.abs_err + hi.abs_err) + std::fabs(hi.value - lo.value);
        return r;
    }
    double front = gamma_fn(b1) * gamma_fn(b2) / (gamma_fn(a1) * gamma_fn(a2));
    double lnZ = std::log(Z);
    if (std::fabs(diff) <= 1e-9) {
        // double poles: logarithmic expansion
        double a = 0.5 * (a1 + a2);
        double sum = 0.0, kfac = 1.0, zp = std::pow(Z, -a);
        double smallest = 1e300;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                kfac *= static_cast<double>(k);
                zp /= Z;
            }
            double g_ak = std::tgamma(a + k);
            double core = (lnZ + 2.0 * digamma(k + 1.0) - digamma(a + k)) * rgamma(b1 - a - k) *
                              rgamma(b2 - a - k) -
                          psi_over_gamma(b1 - a - k) * rgamma(b2 - a - k) -
                          psi_over_gamma(b2 - a - k) * rgamma(b1 - a - k);
            double piece = g_ak * zp / (kfac * kfac) * core;
            if (std::fabs(piece) > smallest && k > 2) break;
            smallest = std::min(smallest, std::fabs(piece) + 1e-300);
            sum += piece;
            r.abs_err = std::fabs(piece);
        }
        r.value = front * sum;
        r.terms_used = kmax;
        return r;
    }
    // two simple-pole series
    double total = 0.0, errs = 0.0;
    const double as[2] = {a1, a2};
    for (int j = 0; j < 2; ++j) {
        double aj = as[j], ao = as[1 - j];
        double sum = 0.0, kfac = 1.0, zp = std::pow(Z, -aj), sgn = 1.0;
        double smallest = 1e300;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                kfac *= static_cast<double>(k);
                zp /= Z;
                sgn = -sgn;
            }
            double piece = sgn * std::tgamma(aj + k) * std::tgamma(ao - aj - k) *
                           rgamma(b1 - aj - k) * rgamma(b2 - aj - k) * zp / kfac;
            if (std::fabs(piece) > smallest && k > 2) break;
            smallest = std::min(smallest, std::fabs(piece) + 1e-300);
            sum += piece;
            errs = std::fabs(piece);
        }
        total += sum;
    }
    r.value = front * total;
    r.abs_err = std::fabs(front) * errs + std::fabs(r.value) * 1e-13;
    r.terms_used = kmax;
    return r;
}

ValueEstimate hyp2f2_neg(double a1, double a2, double b1, double b2, double Z,
                         const Precision& prec) {
    if (Z < 0) throw DomainError("hyp2f2_neg expects the magnitude of a negative argument");
    if (Z <= 120.0) return hyp_pfq({{a1, a2}, {b1, b2}, -Z}, prec);
    return hyp2f2_asym_neg(a1, a2, b1, b2, Z);
}

} // namespace humbert
