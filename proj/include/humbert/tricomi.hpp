#pragma once

#include <complex>

#include "humbert/bigfloat.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// Tricomi U(a; b; z) for z > 0, principal branch.
///
/// Two-Kummer representation away from integer b; near-integer b goes through
/// the b-limit path (integral representation for a > 0, high-precision
/// two-sided limit otherwise). Large z switches to the stable routes.
ValueEstimate tricomi_u(double a, double b, double z);

/// Leading small-z behaviour of U(alpha; 1+alpha-beta; z), split by the
/// ordering of alpha and beta.
enum class SmallZCase { AlphaGreater, AlphaEqual, AlphaLess };

struct SmallZBranch {
    SmallZCase which;
    double value; // leading-order value at the given z
};

SmallZBranch tricomi_u_small_z(double alpha, double beta, double z);

/// Integral-representation evaluation at the current BigFloat precision.
/// Requires a > 0, z > 0.
BigFloat tricomi_u_big(double a, double b, const BigFloat& z);

/// Complex argument with Re z > 0, a > 0 (integral representation).
std::complex<double> tricomi_u_complex(double a, double b, std::complex<double> z);

} // namespace humbert
