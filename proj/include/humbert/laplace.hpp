#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "humbert/bigfloat.hpp"
#include "humbert/series.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// Closed-form Laplace image of one family at fixed (x, y).
///
/// The image is everything inside the inverse transform; the remaining
/// assembly factor is always Gamma(gamma) t^(1-gamma).
struct LaplaceImage {
    Family family = Family::Phi2;
    bool symmetric = false; // Phi2i with x == y
    ParamSet params;
    std::optional<KdFSpec> kdf;
    double x = 0.0;
    double y = 0.0;

    static LaplaceImage make(const ParamSet& params, double x, double y);
    static LaplaceImage make_kdf(const KdFSpec& spec, double x, double y);

    /// Real parts of the branch points / poles on the real axis.
    std::vector<double> singularities() const;
};

struct ILTConfig {
    enum class MethodKind { auto_select, fixed_contour, summation_accel };
    MethodKind method = MethodKind::auto_select;
    int nodes = 0;      // 0 = per-method default (48 contour nodes / 24 stages)
    double shift = std::numeric_limits<double>::quiet_NaN(); // NaN = auto
    double target_tol = 1e-8;

    void validate() const;
};

/// Image value at complex p off the singular set (principal branches).
/// The integrated families support real p only on this entry point.
std::complex<double> image_eval(const LaplaceImage& img, std::complex<double> p);

/// Image value at real p > 0 at the current BigFloat working precision.
BigFloat image_eval_big(const LaplaceImage& img, const BigFloat& p);

/// Numerical inverse Laplace transform of the image at time t.
ValueEstimate invert(const LaplaceImage& img, double t, const ILTConfig& cfg = {});

/// Full function value including the Gamma(gamma) t^(1-gamma) assembly.
ValueEstimate eval_ilt(const ParamSet& params, const EvalPoint& pt, const ILTConfig& cfg = {});
ValueEstimate eval_kdf_ilt(const KdFSpec& spec, const EvalPoint& pt, const ILTConfig& cfg = {});

/// One-dimensional transform identities checked by direct quadrature.
enum class LaplacePairKind { lapFa, lapFb, lapFc, eq29 };

/// params: lapFa {a}; lapFb {a,b}; lapFc {a,b,c}; eq29 {a1,b1,mu}.
/// Returns the maximum relative residual over the p grid.
double laplace_pair_check(LaplacePairKind kind, const std::vector<double>& params, double y,
                          const std::vector<double>& p_grid);

/// Fitted log-log slope of |image(p)| as p -> 0+ (Tauberian exponent probe).
double image_small_p_slope(const LaplaceImage& img, double p_lo = 1e-6, double p_hi = 1e-4,
                           int npts = 9);

} // namespace humbert
