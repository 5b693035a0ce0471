#pragma once

#include <optional>
#include <string>
#include <vector>

#include "humbert/bigfloat.hpp"
#include "humbert/value.hpp"

namespace humbert {

enum class Family { F3, Xi1, Xi2, Phi2, Phi3, Phi2i, Phi3i, F2, Psi1, Psi2, KdF };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Named parameters for one function family; unused fields stay empty.
struct ParamSet {
    Family family = Family::Phi2;
    std::optional<double> alpha, alpha_p, beta, beta_p, gamma, gamma_p, lambda;

    void validate() const;

    static ParamSet f3(double alpha, double alpha_p, double beta, double beta_p, double gamma);
    static ParamSet xi1(double alpha, double beta, double beta_p, double gamma);
    static ParamSet xi2(double alpha, double beta, double gamma);
    static ParamSet phi2(double beta, double beta_p, double gamma);
    static ParamSet phi3(double beta, double gamma);
    static ParamSet phi2i(double beta, double beta_p, double gamma, double lambda);
    static ParamSet phi3i(double beta, double gamma, double lambda);
    static ParamSet f2(double a, double b, double b_p, double c, double c_p);
    static ParamSet psi1(double a, double b, double c, double c_p);
    static ParamSet psi2(double a, double c, double c_p);
};

/// Evaluation point under the substitution convention: the series arguments
/// are X = -t*x and Y = -t*y.
struct EvalPoint {
    double x = 0.0;
    double y = 0.0;
    double t = 1.0;

    void validate() const;
    double X() const { return -t * x; }
    double Y() const { return -t * y; }
};

/// Kampe de Feriet F^{0;p;p'}_{1;q;q'} parameter lists (joint upper empty).
struct KdFSpec {
    std::vector<double> upper_joint; // must be empty
    double gamma = 1.0;
    std::vector<double> upper_x, upper_y, lower_x, lower_y;

    void validate() const;
};

enum class SumOrder { AntiDiagonal, RowMajor };

/// Double series summed along anti-diagonals, with a cancellation monitor
/// that reruns through the adjustable-precision oracle when double precision
/// cannot carry the alternating sums.
ValueEstimate eval_series(const ParamSet& params, const EvalPoint& pt, const Precision& prec = {});

/// Fixed double precision: never falls back; flags `degraded` instead.
ValueEstimate eval_series_fixed(const ParamSet& params, const EvalPoint& pt,
                                const Precision& prec = {});

/// Adjustable-precision direct summation with a geometric tail majorant.
ValueEstimate eval_oracle(const ParamSet& params, const EvalPoint& pt, int digits = 50,
                          long s_max = 6000, SumOrder order = SumOrder::AntiDiagonal);

ValueEstimate eval_kdf_series(const KdFSpec& spec, const EvalPoint& pt,
                              const Precision& prec = {});

/// Relative residuals of gamma * F^(i)(..;gamma,gamma;..) = F(..;gamma+1;..).
struct ReductionResiduals {
    double phi2;
    double phi3;
};

ReductionResiduals lambda_gamma_reduction_check(double beta, double beta_p, double gamma,
                                                const EvalPoint& pt, bool use_oracle = false);

/// Golden-value record produced by the oracle and consumed by the test suite.
struct GoldenRecord {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    double x = 0, y = 0, t = 1;
    double value = 0;
    double abs_err = 0;
    int digits = 50;
};

void write_golden(const std::string& path, const std::vector<GoldenRecord>& records);
std::vector<GoldenRecord> read_golden(const std::string& path);

/// Build a golden record by running the oracle on the given point.
GoldenRecord make_golden(const ParamSet& params, const EvalPoint& pt, int digits);

/// Reconstruct a ParamSet from a golden record's name/value pairs.
ParamSet params_from_golden(const GoldenRecord& rec);

} // namespace humbert
