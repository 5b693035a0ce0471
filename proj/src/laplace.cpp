#include "humbert/laplace.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "humbert/errors.hpp"
#include "humbert/pfq.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/specials.hpp"
#include "humbert/tricomi.hpp"

namespace humbert {

namespace {

constexpr double kSingularGuard = 1e-12;
constexpr double kMinXi = 1e-3; // documented cap: U argument p/x explodes below

using cplx = std::complex<double>;

} // namespace

void ILTConfig::validate() const {
    if (nodes != 0 && nodes < 8) throw DomainError("ILTConfig.nodes must be >= 8 (or 0 = default)");
    if (!(target_tol > 0)) throw DomainError("ILTConfig.target_tol must be positive");
}

LaplaceImage LaplaceImage::make(const ParamSet& params, double x, double y) {
    params.validate();
    LaplaceImage img;
    img.params = params;
    img.family = params.family;
    img.x = x;
    img.y = y;
    switch (params.family) {
        case Family::Phi3:
        case Family::Phi2:
            break;
        case Family::Xi2:
            if (!(x >= kMinXi))
                throw DomainError("Xi image requires x >= 1e-3 (U argument p/x otherwise explodes)");
            break;
        case Family::Xi1:
            if (!(x >= kMinXi))
                throw DomainError("Xi image requires x >= 1e-3 (U argument p/x otherwise explodes)");
            // (p+y)^(-beta') has its branch point at -y: y < 0 puts it on the
            // real-axis summation path
            if (!(y >= 0))
                throw DomainError("Xi1 image inversion requires y >= 0");
            break;
        case Family::F3:
            if (!(x >= kMinXi) || !(y >= kMinXi))
                throw DomainError("F3 image requires x, y >= 1e-3");
            break;
        case Family::Phi3i:
            if (std::fabs(*params.lambda - 1.0) > 1e-12)
                throw DomainError("integrated images hold for lambda = 1");
            if (!(x > 0) || !(y > 0)) throw DomainError("Phi3i image requires x > 0 and y > 0");
            break;
        case Family::Phi2i: {
            if (std::fabs(*params.lambda - 1.0) > 1e-12)
                throw DomainError("integrated images hold for lambda = 1");
            if (!(x > 0) || !(y > 0)) throw DomainError("Phi2i image requires x > 0 and y > 0");
            if (y > x) { // symmetry (x,beta) <-> (y,beta')
                std::swap(img.x, img.y);
                std::swap(img.params.beta, img.params.beta_p);
            }
            if (img.x == img.y) img.symmetric = true;
            break;
        }
        default:
            throw DomainError("family has no closed-form Laplace image here");
    }
    return img;
}

LaplaceImage LaplaceImage::make_kdf(const KdFSpec& spec, double x, double y) {
    spec.validate();
    LaplaceImage img;
    img.family = Family::KdF;
    img.kdf = spec;
    img.params.family = Family::KdF;
    img.x = x;
    img.y = y;
    int px = static_cast<int>(spec.upper_x.size()), qx = static_cast<int>(spec.lower_x.size());
    int py = static_cast<int>(spec.upper_y.size()), qy = static_cast<int>(spec.lower_y.size());
    if ((px == qx + 2 && !(x >= kMinXi)) || (py == qy + 2 && !(y >= kMinXi)))
        throw DomainError("KdF image with a 2F0 side requires that argument >= 1e-3");
    return img;
}

std::vector<double> LaplaceImage::singularities() const {
    std::vector<double> s{0.0};
    switch (family) {
        case Family::Phi3:
            s.push_back(-x);
            break;
        case Family::Phi2:
            s.push_back(-x);
            s.push_back(-y);
            break;
        case Family::Xi2:
            break; // cut along (-inf, 0] only (x > 0 enforced)
        case Family::Xi1:
            s.push_back(-y);
            break;
        case Family::F3:
            break;
        case Family::Phi3i:
        case Family::Phi2i:
            s.push_back(-x);
            if (family == Family::Phi2i && !symmetric) s.push_back(-y);
            break;
        default:
            break;
    }
    if (family == Family::KdF && kdf) {
        if (kdf->upper_x.size() == kdf->lower_x.size() + 1) s.push_back(-x);
        if (kdf->upper_y.size() == kdf->lower_y.size() + 1) s.push_back(-y);
    }
    return s;
}

// ---------------------------------------------------------------------------
// image evaluation
// ---------------------------------------------------------------------------

namespace {

cplx cpow(cplx base, double e) { return std::pow(base, cplx(e, 0.0)); }

// 2F1(1-beta, beta_p; 2-beta; -zeta) for real zeta >= 0
double f_phi2i(double beta, double beta_p, double zeta) {
    return hyp2f1(1.0 - beta, beta_p, 2.0 - beta, -zeta).value;
}

double phi2i_image_real(const ParamSet& ps, double x, double y, double p) {
    double beta = *ps.beta, beta_p = *ps.beta_p, g = *ps.gamma;
    if (std::fabs(1.0 - beta) < 1e-6) {
        // removable 1/(1-beta): fall back to N(p) = int_0^1 (p+xw)^-b (p+yw)^-b' dw
        double achieved = 0;
        long nodes = 0;
        double nval = tanh_sinh_01<double>(
            [&](double w, double) {
                return std::pow(p + x * w, -beta) * std::pow(p + y * w, -beta_p);
            },
            1e-13, 11, achieved, nodes);
        return std::pow(p, beta + beta_p - g) * nval;
    }
    double zeta = (p + x) * y / (p * (x - y));
    double eta = y / (x - y);
    double pref = std::pow(x, beta_p - 1.0) * std::pow(x - y, -beta_p) / (1.0 - beta);
    return pref * (std::pow(p, beta - g) * std::pow(p + x, 1.0 - beta) * f_phi2i(beta, beta_p, zeta) -
                   std::pow(p, 1.0 - g) * f_phi2i(beta, beta_p, eta));
}

double phi3i_image_real(const ParamSet& ps, double x, double y, double p) {
    double beta = *ps.beta, g = *ps.gamma;
    double yx = y / x;
    double pref = std::exp(yx) / x * std::pow(yx, beta - 1.0);
    double g1 = inc_gamma_upper(1.0 - beta, yx).value;
    double g2 = inc_gamma_upper(1.0 - beta, yx + y / p).value;
    return pref * std::pow(p, 1.0 - g) * (g1 - g2);
}

} // namespace

std::complex<double> image_eval(const LaplaceImage& img, std::complex<double> p) {
    for (double s : img.singularities()) {
        if (std::abs(p - cplx(s, 0.0)) < kSingularGuard)
            throw SingularPoint("image evaluated within 1e-12 of a singular point");
    }
    const ParamSet& ps = img.params;
    double x = img.x, y = img.y;
    switch (img.family) {
        case Family::Phi3: {
            double b = *ps.beta, g = *ps.gamma;
            return cpow(p, b - g) * cpow(p + x, -b) * std::exp(-y / p);
        }
        case Family::Phi2: {
            double b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            return cpow(p, b + bp - g) * cpow(p + x, -b) * cpow(p + y, -bp);
        }
        case Family::Xi2: {
            double a = *ps.alpha, b = *ps.beta, g = *ps.gamma;
            cplx u = tricomi_u_complex(a, 1.0 + a - b, p / x);
            return std::pow(x, -a) * cpow(p, a - g) * u * std::exp(-y / p);
        }
        case Family::Xi1: {
            double a = *ps.alpha, b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            cplx u = tricomi_u_complex(a, 1.0 + a - b, p / x);
            return std::pow(x, -a) * cpow(p, a + bp - g) * cpow(p + y, -bp) * u;
        }
        case Family::F3: {
            double a = *ps.alpha, ap = *ps.alpha_p, b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            cplx u1 = tricomi_u_complex(a, 1.0 + a - b, p / x);
            cplx u2 = tricomi_u_complex(ap, 1.0 + ap - bp, p / y);
            return std::pow(x, -a) * std::pow(y, -ap) * cpow(p, a + ap - g) * u1 * u2;
        }
        case Family::Phi2i: {
            if (img.symmetric) {
                double b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
                if (std::fabs(1.0 - b - bp) < 1e-8) // removable: limit is a log
                    return cpow(p, 1.0 - g) * std::log((p + x) / p) / x;
                return (cpow(p, b + bp - g) * cpow(p + x, 1.0 - b - bp) - cpow(p, 1.0 - g)) /
                       ((1.0 - b - bp) * x);
            }
            if (p.imag() != 0.0)
                throw DomainError("Phi2i image supports real p on this entry point");
            return phi2i_image_real(ps, x, y, p.real());
        }
        case Family::Phi3i: {
            if (p.imag() != 0.0)
                throw DomainError("Phi3i image supports real p on this entry point");
            return phi3i_image_real(ps, x, y, p.real());
        }
        case Family::KdF: {
            const KdFSpec& k = *img.kdf;
            auto kside = [&](const std::vector<double>& up, const std::vector<double>& lo,
                             double arg_scale) -> cplx {
                int pc = static_cast<int>(up.size()), qc = static_cast<int>(lo.size());
                cplx w = cplx(-arg_scale, 0.0) / p;
                if (pc == qc + 2) {
                    // 2F0(a,b;;-x/p) = (p/x)^a U(a; 1+a-b; p/x)
                    cplx z = p / arg_scale;
                    return cpow(z, up[0]) * tricomi_u_complex(up[0], 1.0 + up[0] - up[1], z);
                }
                if (pc == qc + 1 && pc == 1) return cpow(cplx(1, 0) - w, -up[0]); // 1F0
                // entire series in complex arithmetic
                cplx term = 1.0, sum = 1.0;
                for (long kk = 0; kk < 4000; ++kk) {
                    cplx num = 1.0, den = 1.0;
                    for (double a : up) num *= a + static_cast<double>(kk);
                    for (double b : lo) den *= b + static_cast<double>(kk);
                    term *= num / den * w / (static_cast<double>(kk) + 1.0);
                    sum += term;
                    if (std::abs(term) < 1e-17 * std::abs(sum) && kk > 3) break;
                }
                return sum;
            };
            return cpow(p, -k.gamma) * kside(k.upper_x, k.lower_x, x) *
                   kside(k.upper_y, k.lower_y, y);
        }
        default:
            throw DomainError("family has no Laplace image");
    }
}

BigFloat image_eval_big(const LaplaceImage& img, const BigFloat& p) {
    if (!(p.sign() > 0)) throw DomainError("image_eval_big requires p > 0");
    const ParamSet& ps = img.params;
    double x = img.x, y = img.y;
    BigFloat one(1);
    switch (img.family) {
        case Family::Phi3: {
            double b = *ps.beta, g = *ps.gamma;
            return pow(p, BigFloat(b - g)) * pow(p + BigFloat(x), BigFloat(-b)) *
                   exp(-BigFloat(y) / p);
        }
        case Family::Phi2: {
            double b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            return pow(p, BigFloat(b + bp - g)) * pow(p + BigFloat(x), BigFloat(-b)) *
                   pow(p + BigFloat(y), BigFloat(-bp));
        }
        case Family::Xi2: {
            double a = *ps.alpha, b = *ps.beta, g = *ps.gamma;
            BigFloat u = tricomi_u_big(a, 1.0 + a - b, p / BigFloat(x));
            return pow(BigFloat(x), BigFloat(-a)) * pow(p, BigFloat(a - g)) * u *
                   exp(-BigFloat(y) / p);
        }
        case Family::Xi1: {
            double a = *ps.alpha, b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            BigFloat u = tricomi_u_big(a, 1.0 + a - b, p / BigFloat(x));
            return pow(BigFloat(x), BigFloat(-a)) * pow(p, BigFloat(a + bp - g)) *
                   pow(p + BigFloat(y), BigFloat(-bp)) * u;
        }
        case Family::F3: {
            double a = *ps.alpha, ap = *ps.alpha_p, b = *ps.beta, bp = *ps.beta_p, g = *ps.gamma;
            BigFloat u1 = tricomi_u_big(a, 1.0 + a - b, p / BigFloat(x));
            BigFloat u2 = tricomi_u_big(ap, 1.0 + ap - bp, p / BigFloat(y));
            return pow(BigFloat(x), BigFloat(-a)) * pow(BigFloat(y), BigFloat(-ap)) *
                   pow(p, BigFloat(a + ap - g)) * u1 * u2;
        }
        case Family::Phi3i: {
            double beta = *ps.beta, g = *ps.gamma;
            BigFloat yx = BigFloat(y) / BigFloat(x);
            BigFloat pref = exp(yx) / BigFloat(x) * pow(yx, BigFloat(beta - 1.0));
            BigFloat g1 = inc_gamma_upper_big(BigFloat(1.0 - beta), yx);
            BigFloat g2 = inc_gamma_upper_big(BigFloat(1.0 - beta), yx + BigFloat(y) / p);
            return pref * pow(p, BigFloat(1.0 - g)) * (g1 - g2);
        }
        case Family::Phi2i: {
            double beta = *ps.beta, beta_p = *ps.beta_p, g = *ps.gamma;
            if (img.symmetric) {
                double bb = beta + beta_p;
                if (std::fabs(1.0 - bb) < 1e-8)
                    return pow(p, BigFloat(1.0 - g)) * log((p + BigFloat(x)) / p) / BigFloat(x);
                return (pow(p, BigFloat(bb - g)) * pow(p + BigFloat(x), BigFloat(1.0 - bb)) -
                        pow(p, BigFloat(1.0 - g))) /
                       (BigFloat(1.0 - bb) * BigFloat(x));
            }
            if (std::fabs(1.0 - beta) < 1e-6) {
                double achieved = 0;
                long nodes = 0;
                BigFloat nval = tanh_sinh_01<BigFloat>(
                    [&](const BigFloat& w, const BigFloat&) {
                        return pow(p + BigFloat(x) * w, BigFloat(-beta)) *
                               pow(p + BigFloat(y) * w, BigFloat(-beta_p));
                    },
                    std::pow(10.0, -(BigFloat::default_digits() - 6)), 12, achieved, nodes);
                return pow(p, BigFloat(beta + beta_p - g)) * nval;
            }
            BigFloat zeta = (p + BigFloat(x)) * BigFloat(y) / (p * BigFloat(x - y));
            BigFloat eta = BigFloat(y / (x - y));
            BigFloat fz = hyp2f1_neg_big(1.0 - beta, beta_p, 2.0 - beta, zeta);
            BigFloat fe = hyp2f1_neg_big(1.0 - beta, beta_p, 2.0 - beta, eta);
            BigFloat pref = pow(BigFloat(x), BigFloat(beta_p - 1.0)) *
                            pow(BigFloat(x - y), BigFloat(-beta_p)) / BigFloat(1.0 - beta);
            return pref *
                   (pow(p, BigFloat(beta - g)) * pow(p + BigFloat(x), BigFloat(1.0 - beta)) * fz -
                    pow(p, BigFloat(1.0 - g)) * fe);
        }
        case Family::KdF: {
            const KdFSpec& k = *img.kdf;
            auto kside = [&](const std::vector<double>& up, const std::vector<double>& lo,
                             double arg_scale) -> BigFloat {
                int pc = static_cast<int>(up.size()), qc = static_cast<int>(lo.size());
                if (pc == qc + 2) {
                    BigFloat z = p / BigFloat(arg_scale);
                    return pow(z, BigFloat(up[0])) * tricomi_u_big(up[0], 1.0 + up[0] - up[1], z);
                }
                BigFloat w = BigFloat(-arg_scale) / p;
                if (pc == qc + 1 && pc == 1) return pow(one - w, BigFloat(-up[0]));
                if (pc == qc + 1 && pc == 2 && w.sign() <= 0)
                    return hyp2f1_neg_big(up[0], up[1], lo[0], -w);
                std::vector<BigFloat> upb(up.begin(), up.end()), lob(lo.begin(), lo.end());
                return hyp_pfq_big(upb, lob, w);
            };
            return pow(p, BigFloat(-k.gamma)) * kside(k.upper_x, k.lower_x, x) *
                   kside(k.upper_y, k.lower_y, y);
        }
        default:
            throw DomainError("family has no Laplace image");
    }
}

// ---------------------------------------------------------------------------
// inversion methods
// ---------------------------------------------------------------------------

namespace {

// fixed Talbot contour with shift; the result is log-scaled by exp(L)
ValueEstimate talbot_once(const LaplaceImage& img, double t, double shift, int M) {
    const double pi = 3.14159265358979323846;
    double r = 2.0 * M / (5.0 * t);
    double L = shift * t + r * t; // max Re(p t) along the contour
    double acc = 0.5 * image_eval(img, cplx(shift + r, 0.0)).real();
    for (int k = 1; k < M; ++k) {
        double th = k * pi / M;
        double cot = std::cos(th) / std::sin(th);
        cplx s(r * th * cot, r * th);
        cplx nu(1.0, th + (th * cot - 1.0) * cot);
        cplx val = image_eval(img, cplx(shift, 0.0) + s);
        cplx contrib = std::exp(t * s - cplx(r * t, 0.0)) * val * nu;
        acc += contrib.real();
    }
    ValueEstimate out;
    out.value = acc * r / M;
    out.log_scale = L;
    out.nodes_used = M;
    out.method = Method::ILT;
    return out;
}

double scaled_rel_diff(const ValueEstimate& a, const ValueEstimate& b) {
    if (a.value == 0.0 && b.value == 0.0) return 0.0;
    if (a.value == 0.0 || b.value == 0.0) return 1.0;
    double la = std::log(std::fabs(a.value)) + a.log_scale;
    double lb = std::log(std::fabs(b.value)) + b.log_scale;
    double ratio = std::exp(la - lb);
    if ((a.value > 0) != (b.value > 0)) ratio = -ratio;
    return std::fabs(ratio - 1.0);
}

// Roundoff grows like exp(2M/5) on the fixed contour, so machine precision
// caps the node count; past the cap the refinement comparison turns into
// noise rather than convergence.
constexpr int kTalbotMaxNodes = 44;

ValueEstimate invert_talbot(const LaplaceImage& img, double t, const ILTConfig& cfg) {
    double s_r = 0.0;
    for (double s : img.singularities()) s_r = std::max(s_r, s);
    double shift = std::isnan(cfg.shift) ? s_r : cfg.shift;
    if (shift < s_r - 1e-12)
        throw ContourError("contour abscissa below the rightmost singularity");
    int M = cfg.nodes > 0 ? std::min(cfg.nodes, kTalbotMaxNodes) : 36;
    // essential singularity e^(-y/p) at the contour origin: resolving it
    // needs M ~ sqrt(|y| t). A shift with shift*t >> 1 moves the origin off
    // p = 0 and buries the factor's blowup under e^(Re q t).
    double ess = 0.0;
    if ((img.family == Family::Phi3 || img.family == Family::Xi2) && shift * t < 25.0)
        ess = std::fabs(img.y);
    if (ess > 0) {
        int need = static_cast<int>(1.3 * std::sqrt(ess * t)) + 12;
        if (need > kTalbotMaxNodes)
            throw NotConverged(
                "fixed-precision contour cannot resolve the e^(-y/p) factor at this t; "
                "use the Euler route or the summation method");
        M = std::max(M, need);
    }
    ValueEstimate coarse = talbot_once(img, t, shift, M - 10);
    ValueEstimate fine = talbot_once(img, t, shift, M);
    if (!std::isfinite(fine.value) || !std::isfinite(coarse.value))
        throw NotConverged("contour evaluation overflowed");
    double rd = scaled_rel_diff(coarse, fine);
    fine.abs_err = std::fabs(fine.value) * std::max(rd, 1e-15);
    if (rd > 10 * cfg.target_tol)
        throw NotConverged("Talbot node refinement changed the result beyond 10x target");
    return fine;
}

// Gaver-Stehfest weights at the current working precision
const std::vector<BigFloat>& gs_weights(int N) {
    static std::map<std::pair<int, int>, std::vector<BigFloat>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(N, BigFloat::working_limbs());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int n2 = N / 2;
    std::vector<BigFloat> fact(static_cast<std::size_t>(N) + 1, BigFloat(1));
    for (int i = 1; i <= N; ++i) fact[i] = fact[i - 1] * BigFloat(i);
    std::vector<BigFloat> zeta(static_cast<std::size_t>(N) + 1, BigFloat(0));
    for (int k = 1; k <= N; ++k) {
        BigFloat sum;
        for (int j = (k + 1) / 2; j <= std::min(k, n2); ++j) {
            BigFloat term = pow(BigFloat(j), static_cast<long long>(n2)) * fact[2 * j];
            term = term / (fact[n2 - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k]);
            sum += term;
        }
        if ((n2 + k) % 2 != 0) sum.negate();
        zeta[k] = sum;
    }
    return cache.emplace(key, std::move(zeta)).first->second;
}

ValueEstimate invert_gs_once(const LaplaceImage& img, double t, int N) {
    BigFloat ln2t = bf_ln2() / BigFloat(t);
    const auto& zeta = gs_weights(N);
    BigFloat acc;
    for (int k = 1; k <= N; ++k) {
        BigFloat p = ln2t * BigFloat(k);
        acc += zeta[k] * image_eval_big(img, p);
    }
    acc = acc * ln2t;
    ValueEstimate out;
    out.value = acc.to_double();
    out.nodes_used = N;
    out.method = Method::ILT;
    return out;
}

ValueEstimate invert_gs(const LaplaceImage& img, double t, const ILTConfig& cfg) {
    int N = cfg.nodes > 0 ? cfg.nodes : 28;
    if (N % 2 != 0) ++N;
    int digits = std::max(40, static_cast<int>(1.8 * N) + 10);
    PrecisionGuard guard(digits);
    ValueEstimate fine = invert_gs_once(img, t, N);
    ValueEstimate coarse = invert_gs_once(img, t, N - 4);
    double rd = std::fabs(fine.value - coarse.value) / (std::fabs(fine.value) + 1e-300);
    fine.abs_err = std::fabs(fine.value) * std::max(rd, 1e-14);
    if (rd > 10 * cfg.target_tol)
        throw NotConverged("Gaver-Stehfest stage refinement beyond 10x target");
    return fine;
}

} // namespace

ValueEstimate invert(const LaplaceImage& img, double t, const ILTConfig& cfg) {
    if (!(t > 0)) throw DomainError("invert requires t > 0");
    cfg.validate();
    ILTConfig::MethodKind m = cfg.method;
    if (m == ILTConfig::MethodKind::auto_select) {
        bool complex_ok = img.family == Family::Phi2 || img.family == Family::Phi3 ||
                          (img.family == Family::Phi2i && img.symmetric);
        m = complex_ok ? ILTConfig::MethodKind::fixed_contour
                       : ILTConfig::MethodKind::summation_accel;
    }
    return m == ILTConfig::MethodKind::fixed_contour ? invert_talbot(img, t, cfg)
                                                     : invert_gs(img, t, cfg);
}

ValueEstimate eval_ilt(const ParamSet& params, const EvalPoint& pt, const ILTConfig& cfg) {
    params.validate();
    pt.validate();
    LaplaceImage img = LaplaceImage::make(params, pt.x, pt.y);
    ValueEstimate r = invert(img, pt.t, cfg);
    double g = *params.gamma;
    double assembly = gamma_fn(g) * std::pow(pt.t, 1.0 - g);
    r.value *= assembly;
    r.abs_err *= std::fabs(assembly);
    r.method = Method::ILT;
    return r;
}

ValueEstimate eval_kdf_ilt(const KdFSpec& spec, const EvalPoint& pt, const ILTConfig& cfg) {
    spec.validate();
    pt.validate();
    LaplaceImage img = LaplaceImage::make_kdf(spec, pt.x, pt.y);
    ValueEstimate r = invert(img, pt.t, cfg);
    double assembly = gamma_fn(spec.gamma) * std::pow(pt.t, 1.0 - spec.gamma);
    r.value *= assembly;
    r.abs_err *= std::fabs(assembly);
    r.method = Method::ILT;
    return r;
}

// ---------------------------------------------------------------------------
// transform-pair checks and the Tauberian probe
// ---------------------------------------------------------------------------

double laplace_pair_check(LaplacePairKind kind, const std::vector<double>& params, double y,
                          const std::vector<double>& p_grid) {
    auto integrand_power = [&]() -> double {
        switch (kind) {
            case LaplacePairKind::lapFa: return params.at(0);
            case LaplacePairKind::lapFb: return params.at(1);
            case LaplacePairKind::lapFc: return params.at(2);
            case LaplacePairKind::eq29: return params.at(2);
        }
        return 1.0;
    };
    auto series_value = [&](double v) -> double {
        switch (kind) {
            case LaplacePairKind::lapFa:
                return hyp0f1(params.at(0), -y * v).real_value();
            case LaplacePairKind::lapFb:
                return hyp1f1(params.at(0), params.at(1), -y * v).value;
            case LaplacePairKind::lapFc:
                return hyp2f1(params.at(0), params.at(1), params.at(2), -y * v).value;
            case LaplacePairKind::eq29:
                return hyp_pfq({{params.at(0)}, {params.at(1), params.at(2)}, -y * v}).value;
        }
        return 0.0;
    };
    auto rhs_value = [&](double p) -> double {
        switch (kind) {
            case LaplacePairKind::lapFa: {
                double a = params.at(0);
                return gamma_fn(a) * std::pow(p, -a) * std::exp(-y / p);
            }
            case LaplacePairKind::lapFb: {
                double a = params.at(0), b = params.at(1);
                return gamma_fn(b) * std::pow(p, a - b) * std::pow(p + y, -a);
            }
            case LaplacePairKind::lapFc: {
                double a = params.at(0), b = params.at(1), c = params.at(2);
                return gamma_fn(c) * std::pow(p, a - c) * std::pow(y, -a) *
                       tricomi_u(a, 1.0 + a - b, p / y).value;
            }
            case LaplacePairKind::eq29: {
                double a1 = params.at(0), b1 = params.at(1), mu = params.at(2);
                return gamma_fn(mu) * std::pow(p, -mu) * hyp1f1(a1, b1, -y / p).value;
            }
        }
        return 0.0;
    };
    double mu = integrand_power();
    double worst = 0.0;
    for (double p : p_grid) {
        if (!(p > 0)) throw DomainError("laplace_pair_check requires positive real grid points");
        double achieved = 0;
        long nodes = 0;
        double lhs = exp_sinh_0inf<double>(
            [&](double v) { return std::exp(-p * v) * std::pow(v, mu - 1.0) * series_value(v); },
            1e-12, 13, achieved, nodes);
        double rhs = rhs_value(p);
        worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
    }
    return worst;
}

double image_small_p_slope(const LaplaceImage& img, double p_lo, double p_hi, int npts) {
    if (!(p_lo > 0) || !(p_hi > p_lo) || npts < 3)
        throw DomainError("image_small_p_slope needs 0 < p_lo < p_hi and npts >= 3");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < npts; ++i) {
        double lp = std::log(p_lo) + (std::log(p_hi) - std::log(p_lo)) * i / (npts - 1);
        double p = std::exp(lp);
        double v = std::abs(image_eval(img, cplx(p, 0.0)));
        double lv = std::log(v);
        sx += lp;
        sy += lv;
        sxx += lp * lp;
        sxy += lp * lv;
    }
    double n = npts;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace humbert
