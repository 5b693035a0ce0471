#include "humbert/quadrature.hpp"

#include <cmath>
#include <map>

namespace humbert {

template <>
std::vector<DENode<BigFloat>> tanh_sinh_row<BigFloat>(int level, double digit_budget) {
    thread_local std::map<std::pair<int, int>, std::vector<DENode<BigFloat>>> cache;
    auto key = std::make_pair(BigFloat::working_limbs(), level);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, quad_detail::build_tanh_sinh_row<BigFloat>(level, digit_budget))
                 .first;
    }
    return it->second;
}

namespace {

// Jacobi polynomial P_n^{(a,b)}(x) and derivative by the three-term recurrence.
void jacobi_eval(int n, double a, double b, double x, double& p, double& dp) {
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    double pm1 = 1.0;
    double pc = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        double kk = k;
        double c1 = 2.0 * kk * (kk + a + b) * (2.0 * kk + a + b - 2.0);
        double c2 = (2.0 * kk + a + b - 1.0) * (a * a - b * b);
        double c3 = (2.0 * kk + a + b - 2.0) * (2.0 * kk + a + b - 1.0) * (2.0 * kk + a + b);
        double c4 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * (2.0 * kk + a + b);
        double pn = ((c2 + c3 * x) * pc - c4 * pm1) / c1;
        pm1 = pc;
        pc = pn;
    }
    p = pc;
    // derivative: (2n+a+b)(1-x^2) P'_n = n(a-b-(2n+a+b)x) P_n + 2(n+a)(n+b) P_{n-1}
    double nn = n;
    double denom = (2.0 * nn + a + b) * (1.0 - x * x);
    dp = (nn * (a - b - (2.0 * nn + a + b) * x) * pc + 2.0 * (nn + a) * (nn + b) * pm1) / denom;
}

} // namespace

JacobiRule gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_jacobi needs n >= 1");
    if (a <= -1.0 || b <= -1.0) throw DomainError("gauss_jacobi exponents must exceed -1");
    JacobiRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    // log of the weight prefactor:
    //   2^(a+b) Gamma(n+a+1) Gamma(n+b+1) / (Gamma(n+a+b+1) (n+1)!)
    //   * (2n+a+b+2)/(n+a+b+1)
    double lf = (a + b) * std::log(2.0) + std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) -
                std::lgamma(n + a + b + 1.0) - std::lgamma(n + 2.0);
    double wf = -std::exp(lf) * (2.0 * n + a + b + 2.0) / (n + a + b + 1.0);
    for (int i = 1; i <= n; ++i) {
        // Chebyshev-flavoured initial guess, then Newton
        double x = std::cos(M_PI * (0.5 * a + i - 0.25) / (0.5 * (1.0 + a + b) + n));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            jacobi_eval(n, a, b, x, p, dp);
            double step = p / dp;
            x -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        jacobi_eval(n, a, b, x, p, dp);
        double pnp1, dnp1;
        jacobi_eval(n + 1, a, b, x, pnp1, dnp1);
        rule.x[i - 1] = x;
        rule.w[i - 1] = wf / (pnp1 * dp);
    }
    return rule;
}

JacobiRule gauss_jacobi_01(int n, double p, double q) {
    // u = (1+x)/2 maps the (1-x)^q (1+x)^p weight onto u^p (1-u)^q
    JacobiRule base = gauss_jacobi(n, q, p);
    JacobiRule out;
    out.x.resize(base.x.size());
    out.w.resize(base.w.size());
    double scale = std::pow(2.0, -(p + q + 1.0));
    for (std::size_t i = 0; i < base.x.size(); ++i) {
        out.x[i] = 0.5 * (1.0 + base.x[i]);
        out.w[i] = scale * base.w[i];
    }
    return out;
}

} // namespace humbert
