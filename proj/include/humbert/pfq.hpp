#pragma once

#include <vector>

#include "humbert/bigfloat.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// Generalised hypergeometric series descriptor.
struct Pfq {
    std::vector<double> upper;
    std::vector<double> lower;
    double z = 0.0;

    /// Throws SingularParameter for non-positive-integer lower parameters,
    /// DomainError for p > q+1.
    void validate() const;
};

/// Sum the pFq series by term recurrence. Falls back to the adjustable
/// precision mode automatically when the cancellation monitor trips.
ValueEstimate hyp_pfq(const Pfq& f, const Precision& prec = {});

/// Double-precision-only variant: never falls back, sets `degraded` and a
/// large abs_err when cancellation destroys the result.
ValueEstimate hyp_pfq_fixed(const Pfq& f, const Precision& prec = {});

/// Direct summation at the current BigFloat working precision.
BigFloat hyp_pfq_big(const std::vector<BigFloat>& upper, const std::vector<BigFloat>& lower,
                     const BigFloat& z, long max_terms = 400000);

/// Kummer's function M(a;b;z) with the stable path for z < 0.
ValueEstimate hyp1f1(double a, double b, double z, const Precision& prec = {});

/// M(a;b;z) in log-scaled form: for large positive z the value is returned as
/// value * exp(log_scale) with log_scale = z, keeping the mantissa finite.
ValueEstimate hyp1f1_scaled(double a, double b, double z, const Precision& prec = {});

/// 2F1(a,b;c;-x) for x >= 0 through the Euler integral that defines the
/// continuation beyond the unit disk. Requires c > b > 0.
ValueEstimate hyp2f1_continued(double a, double b, double c, double x,
                               const QuadratureConfig& q = {});

/// General real-argument driver, z < 1: series on [0,1), Euler integral or
/// Pfaff transformation for z < 0.
ValueEstimate hyp2f1(double a, double b, double c, double z);

/// 2F1(a,b;c;-x), x >= 0, at the current BigFloat precision.
BigFloat hyp2f1_neg_big(double a, double b, double c, const BigFloat& x);

/// Leading algebraic expansion of 2F2(a1,a2;b1,b2;-Z) for large Z > 0,
/// including the logarithmic case a1 == a2. Relative error O(Z^-kmax).
ValueEstimate hyp2f2_asym_neg(double a1, double a2, double b1, double b2, double Z,
                              int kmax = 12);

/// 2F2 at negative argument -Z for any Z >= 0: direct (auto-precision)
/// summation for moderate Z, algebraic expansion beyond.
ValueEstimate hyp2f2_neg(double a1, double a2, double b1, double b2, double Z,
                         const Precision& prec = {});

} // namespace humbert
