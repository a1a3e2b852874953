#ifndef WLAB_UNIPOLY_HPP
#define WLAB_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "wlab/errors.hpp"
#include "wlab/field.hpp"
#include "wlab/matrix.hpp"

namespace wlab {

// Dense univariate polynomial, coefficients lowest degree first, trailing
// structural zeros trimmed. The zero polynomial has an empty vector.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const K& v) {
        if (exact_zero(v)) return UniPoly();
        return UniPoly(std::vector<K>{v});
    }
    // c1 * x + c0
    static UniPoly linear(const K& c0, const K& c1) {
        return UniPoly(std::vector<K>{c0, c1});
    }
    static UniPoly monomial(const K& coef, int deg) {
        if (exact_zero(coef)) return UniPoly();
        std::vector<K> c(static_cast<std::size_t>(deg) + 1, zero_like(coef));
        c.back() = coef;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const { return c_.back(); }
    K coeff_or(int i, const K& proto) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_like(proto);
        return c_[static_cast<std::size_t>(i)];
    }

    UniPoly operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(-v);
        return UniPoly(std::move(c));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const K& proto = a.c_[0];
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<K> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            K ai = i < a.c_.size() ? a.c_[i] : zero_like(proto);
            K bi = i < b.c_.size() ? b.c_[i] : zero_like(proto);
            c.push_back(ai + bi);
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        const K& proto = a.c_[0];
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, zero_like(proto));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (exact_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }

    UniPoly scaled(const K& s) const {
        if (exact_zero(s) || is_zero()) return UniPoly();
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v * s);
        return UniPoly(std::move(c));
    }

    K eval(const K& x) const {
        if (is_zero()) return zero_like(x);
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> c;
        c.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i] * from_int(c_[i], static_cast<long>(i)));
        return UniPoly(std::move(c));
    }

    // Quotient-remainder division; the divisor's leading coefficient must
    // be a unit.
    friend std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        const K lead_inv = inv_of(b.leading());
        if (a.degree() < b.degree()) return {UniPoly(), std::move(a)};
        const K proto = b.leading();
        std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                         zero_like(proto));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int shift = a.degree() - b.degree();
            K f = a.leading() * lead_inv;
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<K> r = a.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r[i + static_cast<std::size_t>(shift)] =
                    r[i + static_cast<std::size_t>(shift)] - f * b.c_[i];
            r.pop_back(); // leading term cancels by construction
            a = UniPoly(std::move(r));
        }
        return {UniPoly(std::move(q)), std::move(a)};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(inv_of(leading()));
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& v = c_[static_cast<std::size_t>(i)];
            if (exact_zero(v)) continue;
            std::string coef = scalar_str(v);
            bool neg = !coef.empty() && coef[0] == '-';
            if (out.empty()) {
                if (neg) {
                    out += "-";
                    coef = coef.substr(1);
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) coef = coef.substr(1);
            }
            bool needs_parens = coef.find_first_of("+-") != std::string::npos ||
                                coef.find('i') != std::string::npos;
            if (i == 0) {
                out += needs_parens ? "(" + coef + ")" : coef;
            } else {
                if (coef != "1") out += (needs_parens ? "(" + coef + ")" : coef) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && exact_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
    requires is_exact_v<K>
bool operator==(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.degree() != b.degree()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (!(a.coeffs()[i] == b.coeffs()[i])) return false;
    return true;
}

// Monic gcd over an exact backend (plain Euclid; divisions may surface
// ZeroDivisorError over a reducible quotient ring).
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    static_assert(is_exact_v<K>);
    while (!b.is_zero()) {
        auto [q, r] = divmod(std::move(a), b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> poly_ext_gcd(UniPoly<K> a,
                                                            UniPoly<K> b) {
    static_assert(is_exact_v<K>);
    if (a.is_zero() && b.is_zero()) return {UniPoly<K>(), UniPoly<K>(), UniPoly<K>()};
    const K proto = a.is_zero() ? b.leading() : a.leading();
    UniPoly<K> u0 = UniPoly<K>::constant(one_like(proto));
    UniPoly<K> v0;
    UniPoly<K> u1;
    UniPoly<K> v1 = UniPoly<K>::constant(one_like(proto));
    while (!b.is_zero()) {
        auto [q, r] = divmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        UniPoly<K> u2 = u0 - q * u1;
        UniPoly<K> v2 = v0 - q * v1;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (a.is_zero()) return {a, u0, v0};
    K s = inv_of(a.leading());
    return {a.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// Yun's square-free decomposition: f = prod_i out[i]^(i+1) up to a
// constant; out[i] pairwise coprime and square-free.
template <class K>
std::vector<UniPoly<K>> squarefree_decomposition(const UniPoly<K>& f) {
    static_assert(is_exact_v<K>);
    if (f.is_zero()) throw Error("squarefree decomposition of zero");
    std::vector<UniPoly<K>> out;
    if (f.degree() == 0) return out;
    UniPoly<K> fp = f.derivative();
    UniPoly<K> a = poly_gcd(f, fp);
    UniPoly<K> b = divmod(f, a).first;
    UniPoly<K> c = divmod(fp, a).first;
    UniPoly<K> d = c - b.derivative();
    while (!(b.degree() == 0)) {
        UniPoly<K> e = poly_gcd(b, d);
        out.push_back(e);
        b = divmod(b, e).first;
        c = divmod(d, e).first;
        d = c - b.derivative();
    }
    return out;
}

// Square-free part: product of the distinct irreducible factors.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
    auto dec = squarefree_decomposition(f);
    UniPoly<K> out = UniPoly<K>::constant(one_like(f.leading()));
    for (const auto& g : dec)
        if (!g.is_zero() && g.degree() > 0) out = out * g;
    return out.monic();
}

// Sylvester matrix of (f, g): the first deg(g) rows carry f's
// coefficients highest degree first, the remaining deg(f) rows carry g's.
template <class K>
Matrix<K> sylvester_matrix(const UniPoly<K>& f, const UniPoly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw Error("sylvester of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) throw Error("sylvester of two constants");
    const K proto = f.leading();
    Matrix<K> s(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n),
                zero_like(proto));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) =
                f.coeffs()[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) =
                g.coeffs()[static_cast<std::size_t>(n - j)];
    return s;
}

// Res(f, g) = det of the Sylvester matrix; Res(c, g) = c^deg(g) for a
// constant c. Two constants are an error.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) throw Error("resultant of two constants");
    if (m == 0) {
        K acc = one_like(f.leading());
        for (int i = 0; i < n; ++i) acc = acc * f.leading();
        return acc;
    }
    if (n == 0) {
        K acc = one_like(g.leading());
        for (int i = 0; i < m; ++i) acc = acc * g.leading();
        return acc;
    }
    Matrix<K> s = sylvester_matrix(f, g);
    if constexpr (is_exact_v<K>) {
        return det_exact(std::move(s));
    } else {
        return det_numeric(std::move(s), [](const K& v) { return v.abs(); });
    }
}

} // namespace wlab

#endif
