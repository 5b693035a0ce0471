#pragma once

#include <string>
#include <vector>

#include "humbert/series.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// Formula variant: Printed follows the source display verbatim; Corrected
/// applies the internally re-derived form where the two differ. The ratio
/// probes decide empirically which one converges (see FINDINGS.md).
enum class Variant { Printed, Corrected };

/// Matched asymptotic branch: theorem number, branch index, guard predicate.
struct AsymRegime {
    int theorem = 0;
    int branch = 0;
    std::string guard;
};

struct AsymValue {
    ValueEstimate value; // log_scale carries exponential growth factors
    AsymRegime regime;
};

/// Leading large-t behaviour of Phi2(beta, beta_p; gamma; -tx, -ty).
AsymValue phi2_asym(double beta, double beta_p, double gamma, double x, double y, double t,
                    Variant variant = Variant::Corrected);

/// Leading large-t behaviour of Phi3(beta; gamma; -tx, -ty).
AsymValue phi3_asym(double beta, double gamma, double x, double y, double t,
                    Variant variant = Variant::Corrected);

/// Leading large-t behaviour of Xi2(alpha, beta; gamma; -tx, -ty), x > 0.
AsymValue xi2_asym(double alpha, double beta, double gamma, double x, double y, double t,
                   Variant variant = Variant::Corrected);

/// Additive pieces of the alpha == beta logarithmic branch, exposed for
/// diagnosis of the printed form.
struct Xi2LogTerms {
    double outer_coeff;    // Gamma(gamma)/Gamma(alpha) (tx)^-a (t|y|)^-(g-a-1)/2
    double y_bessel_term;  // (pi/2) Y_{g-a-1}(2 sqrt(yt)), zero for y < 0
    double bessel_factor;  // J or I value multiplying the bracket
    double half_log_tx;
    double log_x_over_y;
    double psi_plus_2ce;
    double log_scale;      // exponential scale carried by the I factor
};

Xi2LogTerms xi2_log_branch_terms(double alpha, double gamma, double x, double y, double t);

/// Leading large-t behaviour of the integrated Phi3i(beta; gamma, 1; -tx, -ty).
AsymValue phi3i_asym(double beta, double gamma, double x, double y, double t,
                     Variant variant = Variant::Corrected);

/// Leading large-t behaviour of the integrated Phi2i(beta, beta_p; gamma, 1).
AsymValue phi2i_asym(double beta, double beta_p, double gamma, double x, double y, double t,
                     Variant variant = Variant::Corrected);

/// Dispatch by family (families without a stated asymptotic form throw).
AsymValue asym_eval(const ParamSet& params, const EvalPoint& pt,
                    Variant variant = Variant::Corrected);

enum class ExactRoute { Auto, Oracle, ILT, Euler, WIntegral };

/// Ratio-convergence probe: exact/asym over an increasing t grid with the
/// fitted drift of log|ratio - 1| against log t.
struct RatioProbe {
    std::vector<double> t_grid;
    std::vector<double> ratios;
    std::vector<double> exact_log10;  // signed via ratios; magnitudes as log10
    std::vector<double> asym_log10;
    std::vector<bool> valid;
    std::vector<std::string> notes;
    std::string branch_guard;
    double trend = 0.0;
    bool trend_defined = false;

    std::string to_csv() const; // columns: t, exact, asym, ratio, branch
};

RatioProbe ratio_probe(const ParamSet& params, double x, double y,
                       const std::vector<double>& t_grid, ExactRoute route = ExactRoute::Auto,
                       Variant variant = Variant::Corrected);

/// Nearest t to t0 at which cos(2 sqrt(y t) + phase_shift) sits on an
/// antinode; oscillatory branches are probed on such zero-avoiding grids.
double antinode_t(double phase_shift, double y, double t0);

/// Convenience: antinode grid for a J_nu(2 sqrt(y t)) envelope.
std::vector<double> antinode_grid_j(double nu, double y, const std::vector<double>& t0s);

} // namespace humbert
