#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace humbert {

/// Evaluation route that produced a value.
enum class Method { Series, Oracle, Euler, ILT, Asym };

std::string method_name(Method m);

/// Numeric result with an error estimate and diagnostic counters.
///
/// Exponential-regime routes may return the value factored as
/// value * exp(log_scale) to stay inside double range; log_scale is zero
/// everywhere else.
struct ValueEstimate {
    double value = 0.0;
    double abs_err = 0.0;
    Method method = Method::Series;
    long terms_used = 0;
    long nodes_used = 0;
    double log_scale = 0.0;
    /// Set when a fixed-precision path detected digit loss it could not repair.
    bool degraded = false;

    /// Collapses the log-scaled representation; may overflow to +-inf.
    double real_value() const {
        return log_scale == 0.0 ? value : value * std::exp(log_scale);
    }
    /// log10 of |value * exp(log_scale)|, safe for out-of-range magnitudes.
    double log10_abs() const {
        if (value == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log10(std::fabs(value)) + log_scale / std::log(10.0);
    }
    /// Relative error estimate (on the mantissa scale).
    double rel_err() const {
        return value == 0.0 ? abs_err : std::fabs(abs_err / value);
    }
};

/// Tolerances and caps for series summation.
struct Precision {
    double rel_tol = 1e-13;
    long max_terms = 200000;
    int working_digits = 50;

    void validate() const;
};

} // namespace humbert
