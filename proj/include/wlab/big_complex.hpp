#ifndef WLAB_BIG_COMPLEX_HPP
#define WLAB_BIG_COMPLEX_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "wlab/errors.hpp"
#include "wlab/field.hpp"
#include "wlab/rational.hpp"

namespace wlab {

// Arbitrary-precision real, RAII over mpfr_t. Round-to-nearest throughout.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(f_, prec);
        mpfr_set_zero(f_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(f_, mpfr_get_prec(o.f_));
            mpfr_set(f_, o.f_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.f_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.f_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.f_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    // Decimal literal; "0x"/"-0x" prefixed literals parse as hexadecimal.
    static BigFloat from_str(const std::string& s, mpfr_prec_t prec);
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.f_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(f_); }
    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }
    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.f_, f_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.f_, f_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.f_, f_, MPFR_RNDN);
        return r;
    }
    BigFloat mul_2si(long e) const {
        BigFloat r(prec());
        mpfr_mul_2si(r.f_, f_, e, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_less_p(a.f_, b.f_) != 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) {
        return mpfr_greater_p(a.f_, b.f_) != 0;
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_lessequal_p(a.f_, b.f_) != 0;
    }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) {
        return mpfr_greaterequal_p(a.f_, b.f_) != 0;
    }
    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_equal_p(a.f_, b.f_) != 0;
    }

    // Deterministic decimal, enough digits to round-trip at this precision.
    std::string str() const;

    mpfr_ptr raw() { return f_; }
    mpfr_srcptr raw() const { return f_; }

private:
    mpfr_t f_;
};

inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

// Complex scalar: a pair of BigFloats sharing one working precision.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    static BigComplex from_long(long v, mpfr_prec_t prec) {
        return BigComplex(BigFloat::from_long(v, prec), BigFloat(prec));
    }
    static BigComplex from_rational(const Rational& q, mpfr_prec_t prec) {
        return BigComplex(BigFloat::from_rational(q, prec), BigFloat(prec));
    }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigFloat abs() const { return hypot(re_, im_); }
    BigFloat norm() const { return re_ * re_ + im_ * im_; }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_,
                          a.re_ * b.im_ + a.im_ * b.re_);
    }
    BigComplex inv() const {
        if (is_zero()) throw Error("inverse of complex zero");
        BigFloat n = norm();
        return BigComplex(re_ / n, -im_ / n);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        return a * b.inv();
    }

    std::string str() const;

private:
    BigFloat re_, im_;
};

template <>
struct FieldTraits<BigComplex> {
    static constexpr bool is_exact = false;
};

inline BigComplex zero_like(const BigComplex& x) { return BigComplex(x.prec()); }
inline BigComplex one_like(const BigComplex& x) {
    return BigComplex::from_long(1, x.prec());
}
inline BigComplex from_int(const BigComplex& x, long n) {
    return BigComplex::from_long(n, x.prec());
}
inline bool exact_zero(const BigComplex& x) { return x.is_zero(); }
inline BigComplex inv_of(const BigComplex& x) { return x.inv(); }
inline std::string scalar_str(const BigComplex& x) { return x.str(); }

// Relative rank / zero-test tolerance: half the working precision.
inline BigFloat tau_rank(mpfr_prec_t prec) {
    return BigFloat::pow2(-static_cast<long>(prec / 2), prec);
}
// Root cluster / point dedup radius: a third of the working precision.
inline BigFloat cluster_radius(mpfr_prec_t prec) {
    return BigFloat::pow2(-static_cast<long>(prec / 3), prec);
}

} // namespace wlab

#endif
