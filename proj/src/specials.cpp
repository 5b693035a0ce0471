#include "humbert/specials.hpp"

#include <cmath>
#include <limits>

#include "humbert/errors.hpp"

namespace humbert {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double log10_abs_of(double v) {
    return v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log10(std::fabs(v));
}
double log10_abs_of(const BigFloat& v) { return v.log10_abs(); }
int digits_of(double) { return 15; }
int digits_of(const BigFloat&) { return BigFloat::default_digits(); }

/// Gamma(a) for any non-pole real a; BigFloat side reduces to a > 0.
double gamma_any(double a) { return gamma_fn(a); }
BigFloat gamma_any(const BigFloat& a) {
    if (a.sign() > 0) return gamma_big(a);
    // Gamma(a) = Gamma(a+n) / (a (a+1) ... (a+n-1))
    BigFloat prod(1), x = a;
    while (!(x.sign() > 0)) {
        if (x.is_zero()) throw SingularParameter("Gamma pole");
        prod *= x;
        x += BigFloat(1);
    }
    return gamma_big(x) / prod;
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Series: return "series";
        case Method::Oracle: return "oracle";
        case Method::Euler: return "euler";
        case Method::ILT: return "ilt";
        case Method::Asym: return "asym";
    }
    return "?";
}

void Precision::validate() const {
    if (!(rel_tol > 0)) throw DomainError("Precision.rel_tol must be positive");
    if (max_terms < 1) throw DomainError("Precision.max_terms must be >= 1");
    if (working_digits < 16) throw DomainError("Precision.working_digits must be >= 16");
}

bool is_nonpositive_integer(double x, double tol) {
    return x <= tol && std::fabs(x - std::round(x)) <= tol;
}

double pochhammer(double a, long m) {
    double p = 1.0;
    for (long k = 0; k < m; ++k) p *= a + static_cast<double>(k);
    return p;
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw SingularParameter("Gamma pole at x = " + std::to_string(x));
    if (x > 170.0) throw DomainError("gamma_fn argument too large");
    return std::tgamma(x);
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 170.0) return 0.0;
    return 1.0 / std::tgamma(x);
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("digamma pole at x = " + std::to_string(x));
    if (x < 0.5) return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    double s = std::log(x) - 0.5 * inv;
    static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double p = inv2;
    for (double c : b) {
        s -= c * p;
        p *= inv2;
    }
    return acc + s;
}

double psi_over_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        // near x = -n: Gamma ~ (-1)^n/(n!(x+n)), psi ~ -1/(x+n)
        // so psi/Gamma -> (-1)^(n+1) n!
        long n = static_cast<long>(std::llround(-x));
        double f = 1.0;
        for (long k = 2; k <= n; ++k) f *= static_cast<double>(k);
        return (n % 2 == 0) ? -f : f;
    }
    return digamma(x) / gamma_fn(x);
}

// ---------------------------------------------------------------------------
// upper incomplete gamma, templated over double / BigFloat
// ---------------------------------------------------------------------------

namespace {

// Lentz continued fraction; reliable for x >= ~1.5, any real order.
template <typename S>
S inc_gamma_cf(const S& a, const S& x, long& iters) {
    using std::exp;
    using std::log;
    int digits = digits_of(x);
    S b = x + S(1) - a;
    S c = S(1e150);
    S d = S(1) / b;
    S h = d;
    for (long i = 1; i < 100000; ++i) {
        S ai = S(-i) * (S(i) - a);
        b += S(2);
        d = ai * d + b;
        if (log10_abs_of(d) < -120) d = S(1e-120);
        c = b + ai / c;
        if (log10_abs_of(c) < -120) c = S(1e-120);
        d = S(1) / d;
        S delta = d * c;
        h *= delta;
        iters = i;
        if (log10_abs_of(delta - S(1)) < -(digits + 2)) {
            return exp(-x + a * log(x)) * h;
        }
    }
    throw NonConvergent("incomplete gamma continued fraction stalled");
}

// lower-gamma series; Gamma(a,x) = Gamma(a) - P for small x
template <typename S>
S inc_gamma_series(const S& a, const S& x, long& iters) {
    using std::exp;
    using std::log;
    int digits = digits_of(x);
    S term = S(1) / a;
    S sum = term;
    S an = a;
    for (long n = 1; n < 100000; ++n) {
        an += S(1);
        term = term * x / an;
        sum += term;
        iters = n;
        if (log10_abs_of(term) < log10_abs_of(sum) - digits - 2) break;
    }
    S lower = exp(-x + a * log(x)) * sum;
    return gamma_any(a) - lower;
}

// E1 via series (x small); larger x goes through the continued fraction.
template <typename S>
S expint_e1_series(const S& x, double euler_const, long& iters) {
    using std::log;
    int digits = digits_of(x);
    S sum;
    S term(1);
    for (long k = 1; k < 100000; ++k) {
        term = term * x / S(k); // x^k / k!
        S piece = term / S(k);
        if (k % 2 == 1)
            sum += piece;
        else
            sum -= piece;
        iters = k;
        if (log10_abs_of(piece) < log10_abs_of(sum) - digits - 2) break;
    }
    return sum - S(euler_const) - log(x);
}

inline double pow_sx(double x, double e) { return std::pow(x, e); }
inline BigFloat pow_sx(const BigFloat& x, const BigFloat& e) { return pow(x, e); }

template <typename S>
S inc_gamma_impl(const S& a, const S& x, long& iters) {
    using std::exp;
    if (x > S(1.5)) return inc_gamma_cf(a, x, iters);
    double ad = 0;
    if constexpr (std::is_same_v<S, double>)
        ad = a;
    else
        ad = a.to_double();
    if (ad > 0 || std::fabs(ad - std::round(ad)) > 1e-12) return inc_gamma_series(a, x, iters);
    // a is a non-positive integer, x < 1.5: E1 base then downward recurrence
    long n = static_cast<long>(std::llround(-ad));
    S g = expint_e1_series(x, kEulerGamma, iters); // Gamma(0, x)
    S emx = exp(-x);
    S b(0);
    for (long j = 1; j <= n; ++j) {
        // Gamma(b-1, x) = (Gamma(b, x) - x^(b-1) e^-x) / (b - 1)
        S bm1 = b - S(1);
        g = (g - pow_sx(x, bm1) * emx) / bm1;
        b = bm1;
    }
    return g;
}

} // namespace

ValueEstimate inc_gamma_upper(double a, double x) {
    if (!(x > 0)) throw DomainError("inc_gamma_upper requires x > 0");
    long iters = 0;
    double v = inc_gamma_impl<double>(a, x, iters);
    ValueEstimate r;
    r.value = v;
    r.abs_err = std::fabs(v) * 1e-13 + 1e-300;
    r.method = Method::Series;
    r.terms_used = iters;
    return r;
}

BigFloat inc_gamma_upper_big(const BigFloat& a, const BigFloat& x) {
    if (!(x.sign() > 0)) throw DomainError("inc_gamma_upper_big requires x > 0");
    long iters = 0;
    return inc_gamma_impl<BigFloat>(a, x, iters);
}

// ---------------------------------------------------------------------------
// Bessel functions
// ---------------------------------------------------------------------------

namespace {

// 0F1(b; w) by direct series; returns value and cancellation-aware error.
ValueEstimate hyp0f1_series(double b, double w) {
    if (is_nonpositive_integer(b)) throw SingularParameter("0F1 lower parameter pole");
    double term = 1.0, sum = 1.0, maxp = 1.0;
    long k = 0;
    for (k = 0; k < 10000; ++k) {
        term *= w / ((b + k) * (k + 1));
        sum += term;
        maxp = std::max(maxp, std::fabs(sum));
        if (std::fabs(term) < 1e-17 * std::fabs(sum) + 1e-300 && k > 2) break;
    }
    ValueEstimate r;
    r.value = sum;
    r.abs_err = maxp * 1e-16 + std::fabs(term);
    r.terms_used = k;
    return r;
}

// Hankel asymptotic coefficient a_k(nu) = prod_j (4nu^2-(2j-1)^2) / (k! 8^k)
double hankel_coeff_step(double nu, long k, double prev) {
    double mu = 4.0 * nu * nu;
    double odd = 2.0 * static_cast<double>(k) - 1.0;
    return prev * (mu - odd * odd) / (static_cast<double>(k) * 8.0);
}

struct HankelPQ {
    double P, Q, err;
};

// P, Q modulus/phase series for J/Y at large z, truncated at the smallest term
HankelPQ hankel_pq(double nu, double z) {
    double P = 1.0, Q = 0.0;
    double a = 1.0; // a_k / z^k accumulating
    double smallest = 1e300;
    long k = 1;
    for (; k <= 40; ++k) {
        a = hankel_coeff_step(nu, k, a) / z;
        double mag = std::fabs(a);
        if (mag > smallest) break; // divergent tail reached
        smallest = mag;
        int phase = static_cast<int>(k % 4);
        if (phase == 1)
            Q += a;
        else if (phase == 2)
            P -= a;
        else if (phase == 3)
            Q -= a;
        else
            P += a;
    }
    return {P, Q, smallest};
}

ValueEstimate bessel_j_series(double nu, double z) {
    // negative integer order reduces to positive order with parity sign
    if (is_nonpositive_integer(nu) && nu < -0.5) {
        long n = static_cast<long>(std::llround(-nu));
        ValueEstimate r = bessel_j_series(static_cast<double>(n), z);
        if (n % 2 == 1) r.value = -r.value;
        return r;
    }
    ValueEstimate f = hyp0f1_series(nu + 1.0, -0.25 * z * z);
    double pref = std::pow(0.5 * z, nu) * rgamma(nu + 1.0);
    f.value *= pref;
    f.abs_err *= std::fabs(pref);
    return f;
}

ValueEstimate bessel_j_asym(double nu, double z) {
    HankelPQ pq = hankel_pq(nu, z);
    double w = z - nu * kPi / 2.0 - kPi / 4.0;
    double amp = std::sqrt(2.0 / (kPi * z));
    ValueEstimate r;
    r.value = amp * (pq.P * std::cos(w) - pq.Q * std::sin(w));
    r.abs_err = amp * (pq.err + 1e-16 * (std::fabs(pq.P) + std::fabs(pq.Q)));
    r.method = Method::Series;
    return r;
}

ValueEstimate bessel_y_asym(double nu, double z) {
    HankelPQ pq = hankel_pq(nu, z);
    double w = z - nu * kPi / 2.0 - kPi / 4.0;
    double amp = std::sqrt(2.0 / (kPi * z));
    ValueEstimate r;
    r.value = amp * (pq.P * std::sin(w) + pq.Q * std::cos(w));
    r.abs_err = amp * (pq.err + 1e-16 * (std::fabs(pq.P) + std::fabs(pq.Q)));
    return r;
}

ValueEstimate bessel_y_small(double nu, double z) {
    double n_round = std::round(nu);
    if (std::fabs(nu - n_round) > 1e-8) {
        // reflection through J of orders +-nu
        ValueEstimate jp = bessel_j_series(nu, z);
        ValueEstimate jm = bessel_j_series(-nu, z);
        double s = std::sin(nu * kPi), c = std::cos(nu * kPi);
        ValueEstimate r;
        r.value = (jp.value * c - jm.value) / s;
        r.abs_err = (jp.abs_err + jm.abs_err) / std::fabs(s);
        return r;
    }
    // integer order: log series (DLMF 10.8.1 structure)
    long n = static_cast<long>(std::llround(nu));
    bool flip = n < 0 && (n % 2 != 0);
    n = std::labs(n);
    double zh = 0.5 * z, z2 = zh * zh;
    // finite part
    double fin = 0.0;
    if (n > 0) {
        double f = 1.0; // (n-k-1)!/k! * z2^k, k = 0 start: (n-1)!
        for (long k = 2; k < n; ++k) f *= static_cast<double>(k);
        double t = f;
        for (long k = 0; k < n; ++k) {
            if (k > 0) {
                t *= z2 / (static_cast<double>(k) * static_cast<double>(n - k));
            }
            fin += t;
        }
        fin *= -std::pow(zh, -static_cast<double>(n)) / kPi;
    }
    // log part
    ValueEstimate jn = bessel_j_series(static_cast<double>(n), z);
    double logpart = (2.0 / kPi) * std::log(zh) * jn.value;
    // psi series
    double fact_n = 1.0;
    for (long k = 2; k <= n; ++k) fact_n *= static_cast<double>(k);
    double term = 1.0 / fact_n;
    double psum = 0.0;
    double psi_k = -kEulerGamma;                 // psi(1)
    double psi_nk = digamma(static_cast<double>(n) + 1.0);
    for (long k = 0; k < 400; ++k) {
        if (k > 0) {
            term *= -z2 / (static_cast<double>(k) * (static_cast<double>(n + k)));
            psi_k += 1.0 / static_cast<double>(k);
            psi_nk += 1.0 / static_cast<double>(n + k);
        }
        double piece = (psi_k + psi_nk) * term;
        psum += piece;
        if (std::fabs(piece) < 1e-18 * std::fabs(psum) + 1e-300 && k > 3) break;
    }
    psum *= -std::pow(zh, static_cast<double>(n)) / kPi;
    ValueEstimate r;
    r.value = logpart + fin + psum;
    r.abs_err = std::fabs(r.value) * 1e-12 + jn.abs_err * std::fabs(std::log(zh));
    if (flip) r.value = -r.value;
    return r;
}

ValueEstimate bessel_i_series(double nu, double z) {
    if (is_nonpositive_integer(nu) && nu < -0.5) return bessel_i_series(-nu, z);
    ValueEstimate f = hyp0f1_series(nu + 1.0, 0.25 * z * z);
    double pref = std::pow(0.5 * z, nu) * rgamma(nu + 1.0);
    f.value *= pref;
    f.abs_err *= std::fabs(pref);
    return f;
}

// e^-z I_nu(z) for large z: sum_k (-1)^k a_k(nu)/z^k, optimally truncated
ValueEstimate bessel_i_asym_scaled(double nu, double z) {
    double sum = 1.0, u = 1.0, smallest = 1e300;
    for (long k = 1; k <= 40; ++k) {
        u = hankel_coeff_step(nu, k, u) / z; // a_k / z^k
        double mag = std::fabs(u);
        if (mag > smallest) break;
        smallest = mag;
        sum += (k % 2 == 1) ? -u : u;
    }
    double amp = 1.0 / std::sqrt(2.0 * kPi * z);
    ValueEstimate r;
    r.value = amp * sum;
    r.abs_err = amp * (smallest + 1e-16);
    r.log_scale = z;
    return r;
}

} // namespace

ValueEstimate bessel(BesselKind kind, double nu, double z) {
    if (!(z > 0)) throw DomainError("bessel requires z > 0");
    ValueEstimate r;
    switch (kind) {
        case BesselKind::J:
            r = z <= 12.0 ? bessel_j_series(nu, z) : bessel_j_asym(nu, z);
            break;
        case BesselKind::Y:
            r = z <= 12.0 ? bessel_y_small(nu, z) : bessel_y_asym(nu, z);
            break;
        case BesselKind::I: {
            if (z <= 30.0) {
                r = bessel_i_series(nu, z);
            } else {
                r = bessel_i_asym_scaled(nu, z);
                // keep the log-scaled form; callers fold it when needed
            }
            break;
        }
    }
    r.method = Method::Series;
    return r;
}

ValueEstimate bessel_i_scaled(double nu, double z) {
    if (!(z > 0)) throw DomainError("bessel requires z > 0");
    if (z > 30.0) return bessel_i_asym_scaled(nu, z);
    ValueEstimate r = bessel_i_series(nu, z);
    double s = std::exp(-z);
    r.value *= s;
    r.abs_err *= s;
    r.log_scale = z;
    return r;
}

ValueEstimate hyp0f1(double b, double w) {
    if (std::fabs(w) <= 36.0) return hyp0f1_series(b, w);
    double rt = std::sqrt(std::fabs(w));
    if (w < 0) {
        // 0F1(b; -W) = Gamma(b) W^((1-b)/2) J_{b-1}(2 sqrt(W))
        ValueEstimate j = bessel(BesselKind::J, b - 1.0, 2.0 * rt);
        double pref = gamma_fn(b) * std::pow(std::fabs(w), 0.5 * (1.0 - b));
        j.value *= pref;
        j.abs_err *= std::fabs(pref);
        return j;
    }
    ValueEstimate i = bessel_i_scaled(b - 1.0, 2.0 * rt);
    double pref = gamma_fn(b) * std::pow(w, 0.5 * (1.0 - b));
    i.value *= pref;
    i.abs_err *= std::fabs(pref);
    return i; // log_scale = 2 sqrt(w)
}

} // namespace humbert
