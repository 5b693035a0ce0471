#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace humbert {

/// Software floating point with adjustable decimal precision.
///
/// value = sign * sum_i limb[i] * 1e9^(exp - i), leading limb nonzero.
/// Arithmetic truncates to the thread-local working precision set through
/// set_default_digits / PrecisionGuard. Enough for series summation with
/// hundreds of digits of cancellation; not a general-purpose MPFR substitute.
class BigFloat {
public:
    static constexpr std::uint32_t kBase = 1000000000u;
    static constexpr int kBaseDigits = 9;

    BigFloat() = default;
    BigFloat(double v);
    BigFloat(int v) : BigFloat(static_cast<long long>(v)) {}
    BigFloat(long v) : BigFloat(static_cast<long long>(v)) {}
    BigFloat(long long v);

    static int default_digits();
    static void set_default_digits(int digits);
    static int working_limbs();

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigFloat operator-() const;
    BigFloat& negate() { sign_ = -sign_; return *this; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat& operator+=(const BigFloat& b) { *this = *this + b; return *this; }
    BigFloat& operator-=(const BigFloat& b) { *this = *this - b; return *this; }
    BigFloat& operator*=(const BigFloat& b) { *this = *this * b; return *this; }
    BigFloat& operator/=(const BigFloat& b) { *this = *this / b; return *this; }

    /// Three-way comparison: -1, 0, +1.
    static int compare(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

    double to_double() const;
    /// log10 of |x|; -inf for zero. Valid far outside double range.
    double log10_abs() const;
    std::string to_string(int digits = 0) const;

private:
    int sign_ = 0;
    long long exp_ = 0;                // base-1e9 exponent of leading limb
    std::vector<std::uint32_t> limbs_; // most significant first

    void normalize();
    void truncate(int limbs);
    static BigFloat add_mag(const BigFloat& a, const BigFloat& b, int sign);
    static BigFloat sub_mag(const BigFloat& a, const BigFloat& b);
    static int compare_mag(const BigFloat& a, const BigFloat& b);

    friend BigFloat bf_detail_mul(const BigFloat& a, const BigFloat& b, int out_limbs);
    friend BigFloat recip(const BigFloat& d);
    friend BigFloat pow2(long long n);
};

/// Scoped working precision (in decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int saved_;
};

BigFloat abs(const BigFloat& x);
BigFloat recip(const BigFloat& d);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& s);
BigFloat pow(const BigFloat& x, long long n);
BigFloat pow2(long long n);

/// ln 2 and pi at the current working precision (cached per precision).
const BigFloat& bf_ln2();
const BigFloat& bf_pi();

/// Gamma function for x > 0 (Spouge's approximation at working precision).
BigFloat gamma_big(const BigFloat& x);

} // namespace humbert
