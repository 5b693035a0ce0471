#include "humbert/spherical.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "humbert/errors.hpp"
#include "humbert/asym.hpp"
#include "humbert/euler.hpp"
#include "humbert/laplace.hpp"
#include "humbert/series.hpp"
#include "humbert/specials.hpp"

namespace humbert {

void ModelConstants::validate() const {
    if (!(d > 0) || !(g > 0) || !(gamma_diss > 0) || !(C > 0))
        throw DomainError("model constants must all be positive");
}

double ResidualValue::value() const { return mant * std::exp(log_scale); }

double ResidualValue::rel_to_lhs() const {
    return std::fabs(mant) * std::exp(log_scale - lhs_log_scale) / std::fabs(lhs_mant);
}

namespace {

// accumulate signed log-scaled contributions
struct ScaledSum {
    double mant = 0.0;
    double scale = 0.0;

    void add(double v, double ls) {
        if (v == 0.0) return;
        if (mant == 0.0) {
            mant = v;
            scale = ls;
            return;
        }
        if (ls > scale + 40.0) {
            mant = mant * std::exp(scale - ls) + v;
            scale = ls;
        } else {
            mant += v * std::exp(ls - scale);
        }
    }
};

ValueEstimate phi3_term(double Z, double t, const ModelConstants& mc, ConstraintBackend backend) {
    // Phi3(d/2; 3/2; -g Z t, -(g/gamma) t): x = g Z (< 0 at the solution)
    ParamSet p = ParamSet::phi3(0.5 * mc.d, 1.5);
    EvalPoint pt{mc.g * Z, mc.g / mc.gamma_diss, t};
    switch (backend) {
        case ConstraintBackend::OracleSeries:
            return eval_series(p, pt);
        case ConstraintBackend::EulerRoute: {
            QuadratureConfig q;
            q.levels = 14;
            q.target_tol = 1e-9;
            q.strict = false;
            return eval_euler(p, pt, q);
        }
        case ConstraintBackend::ILT:
            return eval_ilt(p, pt);
        case ConstraintBackend::Auto:
            break;
    }
    double scale = t * std::max(std::fabs(pt.x), std::fabs(pt.y));
    if (scale <= 5.0) return eval_series(p, pt);
    // growth exponent of the first argument: the convolution integrand peaks
    // at e^growth while the value is suppressed by e^(-y/|x|), so fixed
    // precision dies once growth outruns the ~16-digit budget
    double growth = Z < 0 ? mc.g * std::fabs(Z) * t : 0.0;
    if (growth <= 35.0) {
        QuadratureConfig q;
        q.levels = 14;
        q.target_tol = 1e-9;
        q.strict = false;
        return eval_euler(p, pt, q);
    }
    if (growth <= 120.0) {
        // transition band: the term still balances the constraint, so it is
        // summed at full adjustable precision
        double osc = mc.g / mc.gamma_diss * t;
        int digits = 40 + static_cast<int>(0.44 * (growth + 2.0 * std::sqrt(osc)));
        return eval_oracle(p, pt, digits, 4000);
    }
    // deep growth: only the (sign-determining) magnitude matters; the leading
    // closed form carries an honest O(1/growth) error
    AsymValue a = phi3_asym(0.5 * mc.d, 1.5, pt.x, pt.y, t);
    a.value.abs_err = std::fabs(a.value.value) * 3.0 / growth;
    return a.value;
}

ValueEstimate phi3i_term(double Z, double t, const ModelConstants& mc, ConstraintBackend backend,
                         bool swapped) {
    // integral term: int_0^1 Phi3(d/2; 3/2; -(g/gamma) t w, -g Z t w) dw,
    // i.e. the integrated function with x-slot (g/gamma) and y-slot g Z
    double x = swapped ? mc.g * Z : mc.g / mc.gamma_diss;
    double y = swapped ? mc.g / mc.gamma_diss : mc.g * Z;
    ParamSet p = ParamSet::phi3i(0.5 * mc.d, 1.5, 1.0);
    EvalPoint pt{x, y, t};
    switch (backend) {
        case ConstraintBackend::OracleSeries:
            return eval_series(p, pt);
        case ConstraintBackend::EulerRoute: {
            QuadratureConfig q;
            q.target_tol = 1e-8;
            q.strict = false;
            return eval_integrated_by_w(p, pt, q, InnerRoute::Euler);
        }
        case ConstraintBackend::ILT: {
            QuadratureConfig q;
            q.target_tol = 1e-8;
            return eval_integrated_by_w(p, pt, q, InnerRoute::ILT);
        }
        case ConstraintBackend::Auto:
            break;
    }
    double scale = t * std::max(std::fabs(x), std::fabs(y));
    if (scale <= 5.0) return eval_series(p, pt);
    QuadratureConfig q;
    q.target_tol = 1e-9;
    q.strict = false;
    return eval_integrated_by_w(p, pt, q, InnerRoute::Euler);
}

} // namespace

ResidualValue constraint_residual_full(double Z, double t, const ModelConstants& mc,
                                       ConstraintBackend backend, bool swap_integrated_args) {
    mc.validate();
    if (!(t > 0)) throw DomainError("constraint requires t > 0");
    double lhs_log = mc.gamma_diss * Z + 0.5 * mc.d * std::log(4.0 * M_PI * mc.gamma_diss * t);
    ValueEstimate f3 = phi3_term(Z, t, mc, backend);
    ValueEstimate f3i = phi3i_term(Z, t, mc, backend, swap_integrated_args);
    double c2 = mc.C * mc.g * mc.g * t * t;
    ScaledSum sum;
    sum.add(1.0, lhs_log);
    sum.add(-0.5 * f3.value, f3.log_scale);
    sum.add(-c2 * f3i.value, f3i.log_scale);
    ResidualValue r;
    r.mant = sum.mant;
    r.log_scale = sum.scale;
    r.lhs_mant = 1.0;
    r.lhs_log_scale = lhs_log;
    r.backend = backend;
    return r;
}

double constraint_residual(double Z, double t, const ModelConstants& mc,
                           ConstraintBackend backend) {
    return constraint_residual_full(Z, t, mc, backend).value();
}

ConstraintState solve_z(double t, const ModelConstants& mc, std::pair<double, double> bracket,
                        ConstraintBackend backend) {
    mc.validate();
    if (!(t > 0)) throw DomainError("solve_z requires t > 0");
    long evals = 0;
    auto residual = [&](double Z) {
        ++evals;
        return constraint_residual_full(Z, t, mc, backend, false);
    };
    double z_lo = bracket.first, z_hi = bracket.second;
    if (z_lo == 0.0 && z_hi == 0.0) {
        // search from the right edge: |Z| grows geometrically until the sign flips
        z_hi = -1e-8;
        ResidualValue r_hi = residual(z_hi);
        int s_hi = r_hi.sign();
        double z = z_hi;
        bool found = false;
        for (int i = 0; i < 48; ++i) {
            z *= 4.0;
            if (z < -10.0 / mc.gamma_diss * 1024.0) break;
            ResidualValue r = residual(z);
            if (r.sign() != s_hi) {
                z_lo = z;
                found = true;
                break;
            }
            z_hi = z;
        }
        if (!found) throw NoBracket("no sign change down to the expanded bracket edge");
    } else {
        if (!(z_lo < z_hi)) throw DomainError("bracket must satisfy Z_lo < Z_hi");
    }
    ResidualValue ra = residual(z_lo), rb = residual(z_hi);
    if (ra.sign() == rb.sign())
        throw NoBracket("constraint residual does not change sign on the bracket");
    // Illinois regula falsi on the scaled residual
    double a = z_lo, b = z_hi;
    // comparable signed magnitudes (common scale keeps the secant stable)
    auto scaled_pair = [](const ResidualValue& u, const ResidualValue& v) {
        double base = std::max(u.log_scale, v.log_scale);
        return std::make_pair(u.mant * std::exp(u.log_scale - base),
                              v.mant * std::exp(v.log_scale - base));
    };
    double root = 0.5 * (a + b);
    ResidualValue rr = ra;
    for (int i = 0; i < 80; ++i) {
        auto [fa, fb] = scaled_pair(ra, rb);
        root = (a * fb - b * fa) / (fb - fa);
        if (!(root > std::min(a, b) && root < std::max(a, b))) root = 0.5 * (a + b);
        rr = residual(root);
        if (rr.rel_to_lhs() < 1e-9 || std::fabs(b - a) < 1e-13 * std::fabs(root)) break;
        if (rr.sign() == ra.sign()) {
            a = root;
            ra = rr;
            rb.mant *= 0.5; // Illinois damping keeps the bracket moving
        } else {
            b = root;
            rb = rr;
            ra.mant *= 0.5;
        }
    }
    ConstraintState st;
    st.t = t;
    st.Z = root;
    st.residual = rr.rel_to_lhs();
    st.negative_ok = root < 0.0;
    st.evaluations = evals;
    return st;
}

ScalingReport scaling_probe(const ModelConstants& mc, const std::vector<double>& t_grid,
                            ConstraintBackend backend) {
    ScalingReport rep;
    switch (backend) {
        case ConstraintBackend::Auto: rep.backend_name = "auto"; break;
        case ConstraintBackend::OracleSeries: rep.backend_name = "oracle"; break;
        case ConstraintBackend::EulerRoute: rep.backend_name = "euler"; break;
        case ConstraintBackend::ILT: rep.backend_name = "ilt"; break;
    }
    for (double t : t_grid) {
        ConstraintState st = solve_z(t, mc, {0.0, 0.0}, backend);
        rep.t.push_back(st.t);
        rep.Z.push_back(st.Z);
        rep.residual.push_back(st.residual);
    }
    if (rep.t.size() < 2) {
        rep.defined = false;
        return rep;
    }
    // pure power: log|Z| = a + b log t.
    // log-law family |Z| ~ t^b log^2 t: the squared-log coefficient is part
    // of the model, so the t-power is fitted on log|Z| - 2 log log t.
    auto fit = [&](bool loglaw, double& slope, double& rms) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        long n = 0;
        for (std::size_t i = 0; i < rep.t.size(); ++i) {
            double lt = std::log(rep.t[i]);
            double u = lt;
            double v = std::log(std::fabs(rep.Z[i])) - (loglaw ? 2.0 * std::log(lt) : 0.0);
            sx += u;
            sy += v;
            sxx += u * u;
            sxy += u * v;
            ++n;
        }
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double icept = (sy - slope * sx) / n;
        rms = 0;
        for (std::size_t i = 0; i < rep.t.size(); ++i) {
            double lt = std::log(rep.t[i]);
            double v = std::log(std::fabs(rep.Z[i])) - (loglaw ? 2.0 * std::log(lt) : 0.0);
            double e = v - (icept + slope * lt);
            rms += e * e;
        }
        rms = std::sqrt(rms / n);
    };
    fit(false, rep.power_exponent, rep.power_residual);
    fit(true, rep.loglaw_exponent, rep.loglaw_residual);
    rep.better_is_loglaw = rep.loglaw_residual < rep.power_residual;
    rep.defined = true;
    return rep;
}

std::string ScalingReport::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "t,Z,residual,method_backend\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << t[i] << "," << Z[i] << "," << residual[i] << "," << backend_name << "\n";
    return os.str();
}

std::string ScalingReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["defined"] = defined;
    j["backend"] = backend_name;
    j["t"] = t;
    j["Z"] = Z;
    j["residual"] = residual;
    j["power_exponent"] = power_exponent;
    j["power_residual"] = power_residual;
    j["loglaw_exponent"] = loglaw_exponent;
    j["loglaw_residual"] = loglaw_residual;
    j["better_model"] = defined ? (better_is_loglaw ? "t^-1 log^2 t" : "pure power") : "undefined";
    return j.dump(2);
}

double lattice_prefactor_exact(double Z, double t, const ModelConstants& mc) {
    mc.validate();
    ValueEstimate i0 = bessel_i_scaled(0.0, 2.0 * mc.gamma_diss * t);
    // e^(-2 gamma t) I_0(2 gamma t) = i0.value exactly (log scales cancel)
    return std::exp(-mc.gamma_diss * Z) * std::pow(i0.value, mc.d);
}

double lattice_prefactor_asym(double Z, double t, const ModelConstants& mc) {
    mc.validate();
    return std::exp(-mc.gamma_diss * Z) * std::pow(4.0 * M_PI * mc.gamma_diss * t, -0.5 * mc.d);
}

} // namespace humbert
