#ifndef WLAB_NUMBER_FIELD_HPP
#define WLAB_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "wlab/rational.hpp"
#include "wlab/unipoly.hpp"

namespace wlab {

class NFElem;

// Shared context: the monic minimal polynomial m(t). Validated monic and
// square-free (gcd(m, m') constant) at construction. m may be reducible;
// the quotient is then a product of fields and inversion can fail with a
// ZeroDivisorError carrying a factor of m.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> make(UniPoly<Rational> modulus);

    const UniPoly<Rational>& modulus() const { return m_; }
    int degree() const { return m_.degree(); }
    std::string str() const { return m_.str("t"); }

    NFElem element(UniPoly<Rational> p) const;
    NFElem from_rational(const Rational& r) const;
    NFElem generator() const; // the class of t

private:
    explicit NumberField(UniPoly<Rational> m) : m_(std::move(m)) {}
    UniPoly<Rational> m_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of Q[t]/(m), stored fully reduced (degree < deg m).
class NFElem {
public:
    NFElem(NumberFieldPtr field, UniPoly<Rational> p);

    const NumberFieldPtr& field() const { return f_; }
    const UniPoly<Rational>& poly() const { return p_; }

    bool is_zero() const { return p_.is_zero(); }
    bool is_one() const { return p_.degree() == 0 && p_.coeffs()[0].is_one(); }
    bool is_rational() const { return p_.degree() <= 0; }
    Rational rational_part() const {
        return p_.is_zero() ? Rational(0) : p_.coeffs()[0];
    }

    NFElem operator-() const { return NFElem(f_, -p_); }
    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        check_same(a, b);
        return NFElem(a.f_, a.p_ + b.p_);
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        check_same(a, b);
        return NFElem(a.f_, a.p_ - b.p_);
    }
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }
    friend bool operator==(const NFElem& a, const NFElem& b) {
        check_same(a, b);
        return a.p_ == b.p_;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    // Extended Euclid against m; throws ZeroDivisorError with the found
    // factor when gcd(p, m) is not constant.
    NFElem inv() const;

    std::string str() const;

private:
    static void check_same(const NFElem& a, const NFElem& b);
    NumberFieldPtr f_;
    UniPoly<Rational> p_;
};

inline NFElem zero_like(const NFElem& x) {
    return NFElem(x.field(), UniPoly<Rational>());
}
inline NFElem one_like(const NFElem& x) {
    return NFElem(x.field(), UniPoly<Rational>::constant(Rational(1)));
}
inline NFElem from_int(const NFElem& x, long n) {
    return NFElem(x.field(), UniPoly<Rational>::constant(Rational(n)));
}
inline bool exact_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem inv_of(const NFElem& x) { return x.inv(); }
inline std::string scalar_str(const NFElem& x) { return x.str(); }

} // namespace wlab

#endif
