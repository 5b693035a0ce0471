#include "humbert/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "json.hpp"

#include "humbert/errors.hpp"
#include "humbert/specials.hpp"

namespace humbert {

std::string family_name(Family f) {
    switch (f) {
        case Family::F3: return "f3";
        case Family::Xi1: return "xi1";
        case Family::Xi2: return "xi2";
        case Family::Phi2: return "phi2";
        case Family::Phi3: return "phi3";
        case Family::Phi2i: return "phi2i";
        case Family::Phi3i: return "phi3i";
        case Family::F2: return "f2";
        case Family::Psi1: return "psi1";
        case Family::Psi2: return "psi2";
        case Family::KdF: return "kdf";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"f3", Family::F3},       {"xi1", Family::Xi1},   {"xi2", Family::Xi2},
        {"phi2", Family::Phi2},   {"phi3", Family::Phi3}, {"phi2i", Family::Phi2i},
        {"phi3i", Family::Phi3i}, {"f2", Family::F2},     {"psi1", Family::Psi1},
        {"psi2", Family::Psi2},   {"kdf", Family::KdF}};
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown family name: " + name);
    return it->second;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

void check_gamma(double g) {
    if (is_nonpositive_integer(g))
        throw SingularParameter("gamma must not be a non-positive integer");
}

} // namespace

void ParamSet::validate() const {
    auto present = [&](const std::optional<double>& f) { return f.has_value(); };
    auto only = [&](bool a, bool ap, bool b, bool bp, bool g, bool gp, bool l) {
        require(present(alpha) == a && present(alpha_p) == ap && present(beta) == b &&
                    present(beta_p) == bp && present(gamma) == g && present(gamma_p) == gp &&
                    present(lambda) == l,
                "parameter fields do not match the family " + family_name(family));
    };
    switch (family) {
        case Family::F3: only(true, true, true, true, true, false, false); check_gamma(*gamma); break;
        case Family::Xi1: only(true, false, true, true, true, false, false); check_gamma(*gamma); break;
        case Family::Xi2: only(true, false, true, false, true, false, false); check_gamma(*gamma); break;
        case Family::Phi2: only(false, false, true, true, true, false, false); check_gamma(*gamma); break;
        case Family::Phi3: only(false, false, true, false, true, false, false); check_gamma(*gamma); break;
        case Family::Phi2i:
            only(false, false, true, true, true, false, true);
            check_gamma(*gamma);
            if (is_nonpositive_integer(*lambda))
                throw SingularParameter("integrated family requires -lambda not in N0");
            break;
        case Family::Phi3i:
            only(false, false, true, false, true, false, true);
            check_gamma(*gamma);
            if (is_nonpositive_integer(*lambda))
                throw SingularParameter("integrated family requires -lambda not in N0");
            break;
        case Family::F2:
            only(true, false, true, true, true, true, false);
            check_gamma(*gamma);
            check_gamma(*gamma_p);
            break;
        case Family::Psi1:
            only(true, false, true, false, true, true, false);
            check_gamma(*gamma);
            check_gamma(*gamma_p);
            break;
        case Family::Psi2:
            only(true, false, false, false, true, true, false);
            check_gamma(*gamma);
            check_gamma(*gamma_p);
            break;
        case Family::KdF:
            throw DomainError("KdF parameters are carried by KdFSpec, not ParamSet");
    }
}

ParamSet ParamSet::f3(double alpha, double alpha_p, double beta, double beta_p, double gamma) {
    ParamSet p;
    p.family = Family::F3;
    p.alpha = alpha;
    p.alpha_p = alpha_p;
    p.beta = beta;
    p.beta_p = beta_p;
    p.gamma = gamma;
    p.validate();
    return p;
}
ParamSet ParamSet::xi1(double alpha, double beta, double beta_p, double gamma) {
    ParamSet p;
    p.family = Family::Xi1;
    p.alpha = alpha;
    p.beta = beta;
    p.beta_p = beta_p;
    p.gamma = gamma;
    p.validate();
    return p;
}
ParamSet ParamSet::xi2(double alpha, double beta, double gamma) {
    ParamSet p;
    p.family = Family::Xi2;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    p.validate();
    return p;
}
ParamSet ParamSet::phi2(double beta, double beta_p, double gamma) {
    ParamSet p;
    p.family = Family::Phi2;
    p.beta = beta;
    p.beta_p = beta_p;
    p.gamma = gamma;
    p.validate();
    return p;
}
ParamSet ParamSet::phi3(double beta, double gamma) {
    ParamSet p;
    p.family = Family::Phi3;
    p.beta = beta;
    p.gamma = gamma;
    p.validate();
    return p;
}
ParamSet ParamSet::phi2i(double beta, double beta_p, double gamma, double lambda) {
    ParamSet p;
    p.family = Family::Phi2i;
    p.beta = beta;
    p.beta_p = beta_p;
    p.gamma = gamma;
    p.lambda = lambda;
    p.validate();
    return p;
}
ParamSet ParamSet::phi3i(double beta, double gamma, double lambda) {
    ParamSet p;
    p.family = Family::Phi3i;
    p.beta = beta;
    p.gamma = gamma;
    p.lambda = lambda;
    p.validate();
    return p;
}
ParamSet ParamSet::f2(double a, double b, double b_p, double c, double c_p) {
    ParamSet p;
    p.family = Family::F2;
    p.alpha = a;
    p.beta = b;
    p.beta_p = b_p;
    p.gamma = c;
    p.gamma_p = c_p;
    p.validate();
    return p;
}
ParamSet ParamSet::psi1(double a, double b, double c, double c_p) {
    ParamSet p;
    p.family = Family::Psi1;
    p.alpha = a;
    p.beta = b;
    p.gamma = c;
    p.gamma_p = c_p;
    p.validate();
    return p;
}
ParamSet ParamSet::psi2(double a, double c, double c_p) {
    ParamSet p;
    p.family = Family::Psi2;
    p.alpha = a;
    p.gamma = c;
    p.gamma_p = c_p;
    p.validate();
    return p;
}

void EvalPoint::validate() const {
    if (!(t > 0)) throw DomainError("EvalPoint.t must be positive");
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("EvalPoint coordinates must be finite");
}

void KdFSpec::validate() const {
    if (!upper_joint.empty())
        throw DomainError("KdFSpec: joint upper parameter list must be empty");
    check_gamma(gamma);
    for (double b : lower_x)
        if (is_nonpositive_integer(b)) throw SingularParameter("KdF lower_x parameter pole");
    for (double b : lower_y)
        if (is_nonpositive_integer(b)) throw SingularParameter("KdF lower_y parameter pole");
    // per-side term ratio behaves like m^(p-q-2) X: the joint gamma and the
    // factorial each contribute one denominator power
    if (static_cast<int>(upper_x.size()) - static_cast<int>(lower_x.size()) > 2)
        throw DomainError("KdF x-side series diverges (p > q+2)");
    if (static_cast<int>(upper_y.size()) - static_cast<int>(lower_y.size()) > 2)
        throw DomainError("KdF y-side series diverges (p' > q'+2)");
}

// ---------------------------------------------------------------------------
// generic double-series machine
// ---------------------------------------------------------------------------

namespace {

/// Pochhammer structure of one double series: products over (p)_m, (p)_n,
/// (p)_{m+n} in numerator and denominator, plus the integrated 1/(m+n+lambda).
struct SeriesShape {
    std::vector<double> num_m, num_n, num_mn, den_m, den_n, den_mn;
    std::optional<double> int_lambda;
    // convergence class per axis: 2 = entire, 1 = unit disk, 0 = F2-type joint
    int x_class = 2, y_class = 2;
    bool f2_joint = false;
};

SeriesShape shape_for(const ParamSet& p) {
    SeriesShape s;
    switch (p.family) {
        case Family::F3:
            s.num_m = {*p.alpha, *p.beta};
            s.num_n = {*p.alpha_p, *p.beta_p};
            s.den_mn = {*p.gamma};
            s.x_class = s.y_class = 1;
            break;
        case Family::Xi1:
            s.num_m = {*p.alpha, *p.beta};
            s.num_n = {*p.beta_p};
            s.den_mn = {*p.gamma};
            s.x_class = 1;
            break;
        case Family::Xi2:
            s.num_m = {*p.alpha, *p.beta};
            s.den_mn = {*p.gamma};
            s.x_class = 1;
            break;
        case Family::Phi2:
            s.num_m = {*p.beta};
            s.num_n = {*p.beta_p};
            s.den_mn = {*p.gamma};
            break;
        case Family::Phi3:
            s.num_m = {*p.beta};
            s.den_mn = {*p.gamma};
            break;
        case Family::Phi2i:
            s.num_m = {*p.beta};
            s.num_n = {*p.beta_p};
            s.den_mn = {*p.gamma};
            s.int_lambda = *p.lambda;
            break;
        case Family::Phi3i:
            s.num_m = {*p.beta};
            s.den_mn = {*p.gamma};
            s.int_lambda = *p.lambda;
            break;
        case Family::F2:
            s.num_mn = {*p.alpha};
            s.num_m = {*p.beta};
            s.num_n = {*p.beta_p};
            s.den_m = {*p.gamma};
            s.den_n = {*p.gamma_p};
            s.x_class = s.y_class = 1;
            s.f2_joint = true;
            break;
        case Family::Psi1:
            s.num_mn = {*p.alpha};
            s.num_m = {*p.beta};
            s.den_m = {*p.gamma};
            s.den_n = {*p.gamma_p};
            s.x_class = 1;
            break;
        case Family::Psi2:
            s.num_mn = {*p.alpha};
            s.den_m = {*p.gamma};
            s.den_n = {*p.gamma_p};
            break;
        case Family::KdF:
            throw DomainError("KdF goes through eval_kdf_series");
    }
    return s;
}

SeriesShape shape_for(const KdFSpec& spec) {
    SeriesShape s;
    s.num_m = spec.upper_x;
    s.num_n = spec.upper_y;
    s.den_m = spec.lower_x;
    s.den_n = spec.lower_y;
    s.den_mn = {spec.gamma};
    int ex = static_cast<int>(spec.upper_x.size()) - static_cast<int>(spec.lower_x.size());
    int ey = static_cast<int>(spec.upper_y.size()) - static_cast<int>(spec.lower_y.size());
    s.x_class = ex >= 2 ? 1 : 2; // p == q+2 needs |X| < 1 (gamma and m! absorb two)
    s.y_class = ey >= 2 ? 1 : 2;
    return s;
}

void check_domain(const SeriesShape& s, double X, double Y) {
    if (s.x_class == 1 && !(std::fabs(X) < 1.0))
        throw OutOfDomain("series route requires |t x| < 1 for this family");
    if (s.y_class == 1 && !(std::fabs(Y) < 1.0))
        throw OutOfDomain("series route requires |t y| < 1 for this family");
    if (s.f2_joint && !(std::fabs(X) + std::fabs(Y) < 1.0))
        throw OutOfDomain("series route requires |t x| + |t y| < 1 for F2");
    for (double b : s.den_m)
        if (is_nonpositive_integer(b)) throw SingularParameter("lower parameter pole");
    for (double b : s.den_n)
        if (is_nonpositive_integer(b)) throw SingularParameter("lower parameter pole");
    for (double b : s.den_mn)
        if (is_nonpositive_integer(b)) throw SingularParameter("lower parameter pole");
}

template <typename S>
struct DiagState {
    std::vector<S> terms; // terms[m] = term(m, s-m) along the anti-diagonal
    long s = 0;
};

// term(m, n+1)/term(m, n) and term(m+1, n)/term(m, n) in scalar S
template <typename S>
S step_ratio(const SeriesShape& sh, bool x_step, long m, long n, const S& X, const S& Y) {
    long s = m + n;
    S num(1), den(1);
    const auto& ax = x_step ? sh.num_m : sh.num_n;
    const auto& bx = x_step ? sh.den_m : sh.den_n;
    long idx = x_step ? m : n;
    for (double a : ax) num *= S(a) + S(idx);
    for (double a : sh.num_mn) num *= S(a) + S(s);
    for (double b : bx) den *= S(b) + S(idx);
    for (double b : sh.den_mn) den *= S(b) + S(s);
    den *= S(idx + 1);
    if (sh.int_lambda) {
        num *= S(*sh.int_lambda) + S(s);
        den *= S(*sh.int_lambda) + S(s + 1);
    }
    return num * (x_step ? X : Y) / den;
}

template <typename S>
void advance_diag(const SeriesShape& sh, DiagState<S>& st, const S& X, const S& Y) {
    long s = st.s;
    std::vector<S> next(static_cast<std::size_t>(s) + 2);
    for (long m = 0; m <= s; ++m)
        next[static_cast<std::size_t>(m)] =
            st.terms[static_cast<std::size_t>(m)] * step_ratio<S>(sh, false, m, s - m, X, Y);
    next[static_cast<std::size_t>(s) + 1] =
        st.terms[static_cast<std::size_t>(s)] * step_ratio<S>(sh, true, s, 0, X, Y);
    st.terms = std::move(next);
    st.s = s + 1;
}

struct DoubleSumResult {
    double value = 0;
    double peak = 0;       // max |running sum| seen (cancellation monitor)
    double last_block = 0;
    long terms = 0;
    long s_reached = 0;
    bool converged = false;
};

DoubleSumResult sum_double(const SeriesShape& sh, double X, double Y, const Precision& prec) {
    DoubleSumResult out;
    DiagState<double> st;
    double first = sh.int_lambda ? 1.0 / *sh.int_lambda : 1.0;
    st.terms = {first};
    double sum = first;
    out.peak = std::fabs(first);
    long total = 1;
    int quiet = 0;
    long s_cap = static_cast<long>(std::sqrt(2.0 * static_cast<double>(prec.max_terms))) + 8;
    for (long s = 1; s <= s_cap; ++s) {
        advance_diag<double>(sh, st, X, Y);
        double block = 0;
        for (double v : st.terms) {
            block += v;
            out.peak = std::max(out.peak, std::fabs(sum + block));
            out.peak = std::max(out.peak, std::fabs(v));
        }
        sum += block;
        total += s + 1;
        out.last_block = std::fabs(block);
        if (!std::isfinite(sum) || !std::isfinite(block)) {
            out.s_reached = s;
            break; // overflow: let the caller fall back or flag
        }
        if (std::fabs(block) < prec.rel_tol * std::fabs(sum) + 1e-305) {
            if (++quiet >= 3 && s >= 3) {
                out.converged = true;
                out.s_reached = s;
                break;
            }
        } else {
            quiet = 0;
        }
        out.s_reached = s;
    }
    out.value = sum;
    out.terms = total;
    return out;
}

ValueEstimate oracle_impl(const SeriesShape& sh, double X, double Y, int digits, long s_max,
                          SumOrder order);

ValueEstimate series_impl(const SeriesShape& sh, double X, double Y, const Precision& prec,
                          bool allow_fallback) {
    prec.validate();
    check_domain(sh, X, Y);
    DoubleSumResult s = sum_double(sh, X, Y, prec);
    double cancel = s.peak / (std::fabs(s.value) + 1e-300);
    bool tripped = cancel > 1e8 || !s.converged;
    if (tripped && allow_fallback) {
        // the double-pass peak is reliable, the garbage sum is not: provision
        // digits against the peak, then verify against the oracle's own value
        int digits = 18 + static_cast<int>(std::ceil(std::log10(cancel + 10.0))) + 10;
        digits = std::max(digits, prec.working_digits);
        long s_max = std::max<long>(2000, 4 * s.s_reached);
        double peak_log10 = std::log10(s.peak + 1e-300);
        for (int pass = 0; pass < 3; ++pass) {
            ValueEstimate o = oracle_impl(sh, X, Y, digits, s_max, SumOrder::AntiDiagonal);
            double value_log10 = std::log10(std::fabs(o.value) + 1e-300);
            int needed = static_cast<int>(std::ceil(peak_log10 - value_log10)) + 26;
            if (needed <= digits || o.value == 0.0) return o;
            digits = needed;
            s_max *= 2;
        }
        return oracle_impl(sh, X, Y, digits, s_max, SumOrder::AntiDiagonal);
    }
    ValueEstimate r;
    r.value = s.value;
    r.abs_err = s.last_block + s.peak * 1e-16;
    r.method = Method::Series;
    r.terms_used = s.terms;
    r.degraded = tripped;
    if (!s.converged && !allow_fallback)
        throw NonConvergent("double series did not converge within the term cap");
    return r;
}

ValueEstimate oracle_impl(const SeriesShape& sh, double X, double Y, int digits, long s_max,
                          SumOrder order) {
    check_domain(sh, X, Y);
    PrecisionGuard guard(digits + 10);
    BigFloat bX(X), bY(Y);
    BigFloat sum;
    double peak_log10 = -1e9;
    long total = 0;
    double tail_bound_log10 = -1e9;
    bool converged = false;
    if (order == SumOrder::AntiDiagonal) {
        DiagState<BigFloat> st;
        BigFloat first = sh.int_lambda ? humbert::recip(BigFloat(*sh.int_lambda)) : BigFloat(1);
        st.terms = {first};
        sum = first;
        total = 1;
        int quiet = 0;
        for (long s = 1; s <= s_max; ++s) {
            advance_diag<BigFloat>(sh, st, bX, bY);
            BigFloat block;
            double max_term_log10 = -1e9;
            for (const auto& v : st.terms) {
                block += v;
                max_term_log10 = std::max(max_term_log10, v.log10_abs());
            }
            sum += block;
            peak_log10 = std::max(peak_log10, sum.log10_abs());
            peak_log10 = std::max(peak_log10, max_term_log10);
            total += s + 1;
            double sum_log10 = sum.log10_abs();
            if (max_term_log10 < sum_log10 - digits - 4) {
                if (++quiet >= 3 && s >= 3) {
                    // geometric tail majorant from the last block ratio
                    tail_bound_log10 = max_term_log10 + std::log10(static_cast<double>(s) + 2.0);
                    converged = true;
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    } else {
        // row-major: sum rows m = 0, 1, ... each over n until negligible
        BigFloat row_first = sh.int_lambda ? humbert::recip(BigFloat(*sh.int_lambda)) : BigFloat(1);
        int quiet_rows = 0;
        for (long m = 0; m <= s_max; ++m) {
            BigFloat term = row_first;
            BigFloat row = term;
            double max_in_row = term.log10_abs();
            int quiet = 0;
            for (long n = 0; n <= s_max; ++n) {
                term = term * step_ratio<BigFloat>(sh, false, m, n, bX, bY);
                row += term;
                ++total;
                max_in_row = std::max(max_in_row, term.log10_abs());
                if (term.log10_abs() < row.log10_abs() - digits - 6) {
                    if (++quiet >= 3) break;
                } else {
                    quiet = 0;
                }
            }
            sum += row;
            peak_log10 = std::max(peak_log10, std::max(sum.log10_abs(), max_in_row));
            if (max_in_row < sum.log10_abs() - digits - 4 && m >= 3) {
                if (++quiet_rows >= 3) {
                    tail_bound_log10 = max_in_row + 1.0;
                    converged = true;
                    break;
                }
            } else {
                quiet_rows = 0;
            }
            row_first = row_first * step_ratio<BigFloat>(sh, true, m, 0, bX, bY);
        }
    }
    if (!converged) throw NonConvergent("oracle summation: tail majorant not established");
    ValueEstimate r;
    r.value = sum.to_double();
    double round_err_log10 = peak_log10 - digits;
    r.abs_err = std::pow(10.0, std::max(tail_bound_log10, round_err_log10));
    r.method = Method::Oracle;
    r.terms_used = total;
    return r;
}

} // namespace

ValueEstimate eval_series(const ParamSet& params, const EvalPoint& pt, const Precision& prec) {
    params.validate();
    pt.validate();
    return series_impl(shape_for(params), pt.X(), pt.Y(), prec, true);
}

ValueEstimate eval_series_fixed(const ParamSet& params, const EvalPoint& pt,
                                const Precision& prec) {
    params.validate();
    pt.validate();
    return series_impl(shape_for(params), pt.X(), pt.Y(), prec, false);
}

ValueEstimate eval_oracle(const ParamSet& params, const EvalPoint& pt, int digits, long s_max,
                          SumOrder order) {
    params.validate();
    pt.validate();
    if (digits < 16) throw DomainError("oracle digits must be >= 16");
    return oracle_impl(shape_for(params), pt.X(), pt.Y(), digits, s_max, order);
}

ValueEstimate eval_kdf_series(const KdFSpec& spec, const EvalPoint& pt, const Precision& prec) {
    spec.validate();
    pt.validate();
    return series_impl(shape_for(spec), pt.X(), pt.Y(), prec, true);
}

ReductionResiduals lambda_gamma_reduction_check(double beta, double beta_p, double gamma,
                                                const EvalPoint& pt, bool use_oracle) {
    auto value = [&](const ParamSet& p) {
        return use_oracle ? eval_oracle(p, pt).value : eval_series(p, pt).value;
    };
    ReductionResiduals r{};
    {
        double lhs = gamma * value(ParamSet::phi2i(beta, beta_p, gamma, gamma));
        double rhs = value(ParamSet::phi2(beta, beta_p, gamma + 1.0));
        r.phi2 = std::fabs(lhs - rhs) / std::fabs(rhs);
    }
    {
        double lhs = gamma * value(ParamSet::phi3i(beta, gamma, gamma));
        double rhs = value(ParamSet::phi3(beta, gamma + 1.0));
        r.phi3 = std::fabs(lhs - rhs) / std::fabs(rhs);
    }
    return r;
}

// ---------------------------------------------------------------------------
// golden files
// ---------------------------------------------------------------------------

void write_golden(const std::string& path, const std::vector<GoldenRecord>& records) {
    nlohmann::json root;
    root["schema"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json j;
        j["family"] = rec.family;
        nlohmann::json params;
        for (const auto& [k, v] : rec.params) params[k] = v;
        j["params"] = params;
        j["x"] = rec.x;
        j["y"] = rec.y;
        j["t"] = rec.t;
        j["value"] = rec.value;
        j["abs_err"] = rec.abs_err;
        j["digits"] = rec.digits;
        arr.push_back(j);
    }
    root["records"] = arr;
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open golden file for writing: " + path);
    out << root.dump(2) << "\n";
}

std::vector<GoldenRecord> read_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open golden file: " + path);
    nlohmann::json root;
    in >> root;
    if (root.value("schema", 0) != 1) throw DomainError("golden file schema mismatch");
    std::vector<GoldenRecord> records;
    for (const auto& j : root.at("records")) {
        GoldenRecord rec;
        rec.family = j.at("family").get<std::string>();
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            rec.params.emplace_back(it.key(), it.value().get<double>());
        rec.x = j.at("x").get<double>();
        rec.y = j.at("y").get<double>();
        rec.t = j.at("t").get<double>();
        rec.value = j.at("value").get<double>();
        rec.abs_err = j.at("abs_err").get<double>();
        rec.digits = j.at("digits").get<int>();
        records.push_back(std::move(rec));
    }
    return records;
}

GoldenRecord make_golden(const ParamSet& params, const EvalPoint& pt, int digits) {
    GoldenRecord rec;
    rec.family = family_name(params.family);
    auto push = [&](const char* name, const std::optional<double>& v) {
        if (v) rec.params.emplace_back(name, *v);
    };
    push("alpha", params.alpha);
    push("alpha_p", params.alpha_p);
    push("beta", params.beta);
    push("beta_p", params.beta_p);
    push("gamma", params.gamma);
    push("gamma_p", params.gamma_p);
    push("lambda", params.lambda);
    rec.x = pt.x;
    rec.y = pt.y;
    rec.t = pt.t;
    rec.digits = digits;
    ValueEstimate v = eval_oracle(params, pt, digits);
    rec.value = v.value;
    rec.abs_err = v.abs_err;
    return rec;
}

ParamSet params_from_golden(const GoldenRecord& rec) {
    ParamSet p;
    p.family = family_from_name(rec.family);
    for (const auto& [k, v] : rec.params) {
        if (k == "alpha") p.alpha = v;
        else if (k == "alpha_p") p.alpha_p = v;
        else if (k == "beta") p.beta = v;
        else if (k == "beta_p") p.beta_p = v;
        else if (k == "gamma") p.gamma = v;
        else if (k == "gamma_p") p.gamma_p = v;
        else if (k == "lambda") p.lambda = v;
        else throw DomainError("unknown golden parameter name: " + k);
    }
    p.validate();
    return p;
}

} // namespace humbert
