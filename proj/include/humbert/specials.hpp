#pragma once

#include "humbert/bigfloat.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// Euler's constant C_E.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Rising factorial (a)_m = a(a+1)...(a+m-1); exact product, (a)_0 = 1.
double pochhammer(double a, long m);

/// Gamma with pole detection; throws SingularParameter at non-positive integers.
double gamma_fn(double x);

/// 1/Gamma(x); returns 0 at the poles instead of throwing.
double rgamma(double x);

/// psi(x)/Gamma(x), finite everywhere (limit value at non-positive integers).
double psi_over_gamma(double x);

/// Digamma; throws PoleError at non-positive integers.
double digamma(double x);

bool is_nonpositive_integer(double x, double tol = 1e-12);

/// Upper incomplete gamma Gamma(a, x) for x > 0, any real order a.
ValueEstimate inc_gamma_upper(double a, double x);

/// BigFloat version at the current working precision (x > 0).
BigFloat inc_gamma_upper_big(const BigFloat& a, const BigFloat& x);

enum class BesselKind { J, I, Y };

/// Bessel J/I/Y of real order for z > 0.
ValueEstimate bessel(BesselKind kind, double nu, double z);

/// I_nu(z) scaled by exp(-z): returns {value = I*exp(-z), log_scale = z}.
ValueEstimate bessel_i_scaled(double nu, double z);

/// 0F1(b; w) for real w, stable for large |w| (Bessel reduction).
/// For large positive w the result is returned log-scaled.
ValueEstimate hyp0f1(double b, double w);

} // namespace humbert
