#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "aimspec/errors.hpp"

namespace aimspec {

/// Mantissa width, in bits, of an extended-precision computation. One
/// computation uses a single fixed precision throughout; results are then
/// deterministic down to the last bit.
class Precision {
  public:
    static constexpr int min_bits = 128;

    explicit Precision(int bits) : bits_(bits) {
        if (bits < min_bits)
            throw InvalidInput("precision must be at least 128 bits");
    }

    int bits() const { return bits_; }
    Precision doubled() const { return Precision(2 * bits_); }

    friend bool operator==(Precision a, Precision b) { return a.bits_ == b.bits_; }
    friend bool operator!=(Precision a, Precision b) { return !(a == b); }

  private:
    int bits_;
};

/// Extended-precision real number (MPFR-backed, round-to-nearest).
///
/// Value semantics: immutable once built except through assignment; safe to
/// copy across threads. Mixed-precision operands produce a result at the
/// wider precision, but within one solver run every value is created at the
/// configured precision so this never triggers.
class Real {
  public:
    Real() { mpfr_init2(v_, Precision::min_bits); mpfr_set_zero(v_, 1); }

    explicit Real(Precision prec) {
        mpfr_init2(v_, prec.bits());
        mpfr_set_zero(v_, 1);
    }

    Real(double value, Precision prec) {
        mpfr_init2(v_, prec.bits());
        mpfr_set_d(v_, value, MPFR_RNDN);
    }

    Real(long value, Precision prec) {
        mpfr_init2(v_, prec.bits());
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    /// Parses a decimal literal, correctly rounded to `prec`. This is the
    /// right way to feed values like 0.3 into a high-precision run; going
    /// through double would bake in a 2^-53 perturbation.
    Real(const std::string& decimal, Precision prec);

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    Precision precision() const { return Precision(static_cast<int>(mpfr_get_prec(v_))); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with the given number of significant digits.
    std::string str(int significant_digits) const;

    /// Exact hexadecimal-float representation; equal values at equal
    /// precision produce identical strings (used by determinism checks).
    std::string hex() const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; 0 for zero/non-finite.
    long exponent2() const { return is_zero() || !is_finite() ? 0 : mpfr_get_exp(v_); }

    // -- arithmetic ---------------------------------------------------------

    friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    /// *this += a*b with a single rounding; the jet convolution kernel.
    Real& fma_add(const Real& a, const Real& b) {
        mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
        return *this;
    }

    Real& mul_ui(unsigned long n) { mpfr_mul_ui(v_, v_, n, MPFR_RNDN); return *this; }

    // -- comparisons (false on NaN, like IEEE) -------------------------------

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

    // -- elementary functions -----------------------------------------------

    static Real abs(const Real& x) { return unary(x, mpfr_abs); }
    static Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
    static Real exp(const Real& x) { return unary(x, mpfr_exp); }
    static Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
    static Real log(const Real& x) { return unary(x, mpfr_log); }
    static Real sinh(const Real& x) { return unary(x, mpfr_sinh); }

    static Real pow_int(const Real& x, long n) {
        Real r(x.precision());
        mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
        return r;
    }

    /// x * 2^n, exact.
    static Real ldexp(const Real& x, long n) {
        Real r(x.precision());
        mpfr_mul_2si(r.v_, x.v_, n, MPFR_RNDN);
        return r;
    }

    static Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
    static Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

    /// Midpoint (a+b)/2, computed as an exact halving of the rounded sum.
    static Real midpoint(const Real& a, const Real& b) { return ldexp(a + b, -1); }

    mpfr_srcptr raw() const { return v_; }

  private:
    using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real binary(const Real& a, const Real& b, BinaryFn fn) {
        Real r(Precision(static_cast<int>(
            std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)))));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    static Real unary(const Real& x, UnaryFn fn) {
        Real r(x.precision());
        fn(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

/// Strict weak order for map keys; callers must not insert NaNs.
struct RealLess {
    bool operator()(const Real& a, const Real& b) const { return a < b; }
};

} // namespace aimspec
