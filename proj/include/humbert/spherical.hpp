#pragma once

#include <string>
#include <utility>
#include <vector>

#include "humbert/value.hpp"

namespace humbert {

/// Model constants: spatial dimension (possibly non-integer), quantum
/// coupling, dissipative coupling, initial-state constant.
struct ModelConstants {
    double d = 3.0;
    double g = 1.0;
    double gamma_diss = 1.0;
    double C = 1.0;

    void validate() const;
};

enum class ConstraintBackend { Auto, OracleSeries, EulerRoute, ILT };

/// Constraint residual LHS - RHS in overflow-safe form: value * exp(log_scale).
struct ResidualValue {
    double mant = 0.0;
    double log_scale = 0.0;
    double lhs_mant = 0.0;      // the e^(gamma Z) (4 pi gamma t)^(d/2) side
    double lhs_log_scale = 0.0;
    ConstraintBackend backend = ConstraintBackend::Auto;

    double value() const;          // may overflow to +-inf honestly
    double rel_to_lhs() const;     // |residual| / LHS
    int sign() const { return mant > 0 ? 1 : (mant < 0 ? -1 : 0); }
};

ResidualValue constraint_residual_full(double Z, double t, const ModelConstants& mc,
                                       ConstraintBackend backend = ConstraintBackend::Auto,
                                       bool swap_integrated_args = false);

/// Plain-double convenience wrapper around constraint_residual_full.
double constraint_residual(double Z, double t, const ModelConstants& mc,
                           ConstraintBackend backend = ConstraintBackend::Auto);

struct ConstraintState {
    double t = 0.0;
    double Z = 0.0;
    double residual = 0.0;     // relative to the LHS
    bool negative_ok = true;   // Z < 0 as claimed; flagged, not fatal
    long evaluations = 0;
};

/// Root of the constraint in Z. The default bracket [-10/gamma_diss, -1e-8]
/// is searched from the right and expanded geometrically before giving up.
ConstraintState solve_z(double t, const ModelConstants& mc,
                        std::pair<double, double> bracket = {0.0, 0.0},
                        ConstraintBackend backend = ConstraintBackend::Auto);

/// Long-time law probe: fits log|Z| against log t (pure power) and against
/// log t - 2 log log t (the t^-1 log^2 t family) and reports both.
struct ScalingReport {
    std::vector<double> t, Z, residual;
    std::string backend_name;
    double power_exponent = 0.0;
    double power_residual = 0.0;
    double loglaw_exponent = 0.0;
    double loglaw_residual = 0.0;
    bool defined = false;
    bool better_is_loglaw = false;

    std::string to_csv() const;  // t, Z, residual, method_backend
    std::string to_json() const;
};

ScalingReport scaling_probe(const ModelConstants& mc, const std::vector<double>& t_grid,
                            ConstraintBackend backend = ConstraintBackend::Auto);

/// Closed-form anchor e^(-gamma Z) (e^(-2 gamma t) I_0(2 gamma t))^d and its
/// large-t form e^(-gamma Z) (4 pi gamma t)^(-d/2).
double lattice_prefactor_exact(double Z, double t, const ModelConstants& mc);
double lattice_prefactor_asym(double Z, double t, const ModelConstants& mc);

} // namespace humbert
