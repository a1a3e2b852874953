#include "wlab/number_field.hpp"

namespace wlab {

std::shared_ptr<const NumberField> NumberField::make(UniPoly<Rational> modulus) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw InputError("minimal polynomial must have degree >= 1");
    if (!modulus.leading().is_one())
        throw InputError("minimal polynomial must be monic: " + modulus.str("t"));
    UniPoly<Rational> g = poly_gcd(modulus, modulus.derivative());
    if (g.degree() > 0)
        throw InputError("minimal polynomial is not square-free; repeated factor " +
                         g.str("t"));
    return std::shared_ptr<const NumberField>(new NumberField(std::move(modulus)));
}

NFElem NumberField::element(UniPoly<Rational> p) const {
    return NFElem(shared_from_this(), std::move(p));
}

NFElem NumberField::from_rational(const Rational& r) const {
    return element(UniPoly<Rational>::constant(r));
}

NFElem NumberField::generator() const {
    return element(UniPoly<Rational>(std::vector<Rational>{Rational(0), Rational(1)}));
}

NFElem::NFElem(NumberFieldPtr field, UniPoly<Rational> p) : f_(std::move(field)) {
    if (!f_) throw Error("number-field element without a field context");
    if (p.degree() >= f_->degree()) p = divmod(std::move(p), f_->modulus()).second;
    p_ = std::move(p);
}

void NFElem::check_same(const NFElem& a, const NFElem& b) {
    if (a.f_ == b.f_) return;
    if (a.f_->modulus() == b.f_->modulus()) return;
    throw BackendMismatch("number-field elements over different minimal polynomials: " +
                          a.f_->str() + " vs " + b.f_->str());
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    NFElem::check_same(a, b);
    return NFElem(a.f_, a.p_ * b.p_);
}

NFElem NFElem::inv() const {
    if (is_zero()) throw Error("inverse of zero in " + f_->str());
    auto [g, u, v] = poly_ext_gcd(p_, f_->modulus());
    (void)v;
    if (g.degree() > 0)
        throw ZeroDivisorError("element " + str() + " is a zero divisor modulo " +
                                   f_->str(),
                               g.str("t"));
    // g is the monic gcd = 1, and u*p + v*m = 1, so u is the inverse.
    return NFElem(f_, std::move(u));
}

std::string NFElem::str() const { return p_.str("t"); }

} // namespace wlab
