#include "wlab/big_complex.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace wlab {

BigFloat BigFloat::from_str(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    std::string t = s;
    int base = 10;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) {
        base = 16;
        t = t.substr(2);
    }
    if (t.empty() || mpfr_set_str(r.f_, t.c_str(), base, MPFR_RNDN) != 0)
        throw InputError("bad big-float literal: '" + s + "'");
    if (neg) mpfr_neg(r.f_, r.f_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str() const {
    if (mpfr_nan_p(f_)) return "nan";
    if (mpfr_inf_p(f_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    // ceil(prec * log10(2)) + 2 digits guarantees read-back identity.
    std::size_t digits = static_cast<std::size_t>(
                             std::ceil(static_cast<double>(prec()) * 0.30103)) +
                         2;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, f_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    // strip trailing zeros of the mantissa (keeps output stable and short)
    auto last = mant.find_last_not_of('0');
    if (last != std::string::npos) mant = mant.substr(0, last + 1);
    if (mant.empty()) mant = "0";
    // mantissa is 0.<mant> * 10^e
    std::string out = neg ? "-" : "";
    out += "0.";
    out += mant;
    out += "e";
    out += std::to_string(static_cast<long>(e));
    return out;
}

std::string BigComplex::str() const {
    if (im_.is_zero()) return re_.str();
    std::string i = im_.str();
    if (re_.is_zero()) return i + "i";
    if (!i.empty() && i[0] == '-') return re_.str() + i + "i";
    return re_.str() + "+" + i + "i";
}

} // namespace wlab
