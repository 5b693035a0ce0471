#pragma once

#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "humbert/value.hpp"

namespace humbert {

/// One factor of a Lemma-1 convolution: v^power * pFq(upper; lower; sign*x*v).
struct ConvolutionFactor {
    double power_exponent;        // exponent of the algebraic weight
    std::vector<double> upper;    // 0, 1 or 2 upper parameters
    double lower = 1.0;           // single lower parameter (gamma-eps or eps)
};

/// Convolution representation of one family at a fixed splitting eps.
struct ConvolutionKernel {
    Family family;
    double epsilon;
    ConvolutionFactor f1; // carries the x argument
    ConvolutionFactor f2; // carries the y argument

    static ConvolutionKernel make(const ParamSet& params, double eps);
};

/// Eulerian convolution route (the analytic continuation beyond the series
/// domains). eps must satisfy 0 < eps < gamma; if omitted, gamma/2 is used.
ValueEstimate eval_euler(const ParamSet& params, const EvalPoint& pt, double eps,
                         const QuadratureConfig& q = {});
ValueEstimate eval_euler(const ParamSet& params, const EvalPoint& pt,
                         const QuadratureConfig& q = {});

/// Semi-infinite representations of F2, Psi1, Psi2.
ValueEstimate eval_semi_infinite(const ParamSet& params, const EvalPoint& pt,
                                 const QuadratureConfig& q = {});

/// Inner evaluator choice for the w-integral of the integrated families.
enum class InnerRoute { Auto, Series, Oracle, ILT, Euler };

/// Integrated Humbert functions as int_0^1 dw of the plain family at scaled
/// arguments; valid for lambda = 1 only.
ValueEstimate eval_integrated_by_w(const ParamSet& params, const EvalPoint& pt,
                                   const QuadratureConfig& q = {},
                                   InnerRoute inner = InnerRoute::Auto);

/// Moment-integral identity residual:
/// |int_0^1 w^(l-1) (1-w)^(mu-1) Phi2(..;-xw,-xw) dw - B(l,mu) 2F2(..;-x)| (relative).
double corollary2_check(double beta, double beta_p, double gamma, double lambda, double mu,
                        double x, const QuadratureConfig& q = {});

/// Eulerian form of the Kampe de Feriet family (experimental continuation:
/// evaluable whenever both inner factors are).
ValueEstimate eval_kdf_euler(const KdFSpec& spec, const EvalPoint& pt, double eps,
                             const QuadratureConfig& q = {});

} // namespace humbert
