#ifndef WLAB_HOMOPOLY_HPP
#define WLAB_HOMOPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wlab/errors.hpp"
#include "wlab/field.hpp"

namespace wlab {

using Exponents = std::array<int, 3>; // (a, b, c) for x^a y^b z^c

// Canonical term order: graded lex with x > y > z. Within one homogeneous
// degree this is plain lex, descending.
struct TermOrder {
    bool operator()(const Exponents& p, const Exponents& q) const {
        int dp = p[0] + p[1] + p[2], dq = q[0] + q[1] + q[2];
        if (dp != dq) return dp > dq;
        return p > q;
    }
};

// Homogeneous trivariate polynomial over one backend; sparse term map,
// no zero coefficients stored. Empty map = the zero polynomial (degree
// kept as shape information).
template <class K>
class HomogeneousPoly {
public:
    explicit HomogeneousPoly(int degree) : degree_(degree) {
        if (degree < 0) throw Error("negative degree");
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, K, TermOrder>& terms() const { return terms_; }

    void add_term(const Exponents& e, const K& coef) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
            throw InputError("exponents (" + std::to_string(e[0]) + "," +
                             std::to_string(e[1]) + "," + std::to_string(e[2]) +
                             ") do not sum to degree " + std::to_string(degree_));
        if (exact_zero(coef)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, coef);
        } else {
            it->second = it->second + coef;
            if (exact_zero(it->second)) terms_.erase(it);
        }
    }

    static HomogeneousPoly monomial(const Exponents& e, const K& coef) {
        HomogeneousPoly p(e[0] + e[1] + e[2]);
        p.add_term(e, coef);
        return p;
    }

    K evaluate(const std::array<K, 3>& v) const {
        K acc = zero_like(v[0]);
        for (const auto& [e, coef] : terms_) {
            K t = coef;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                    t = t * v[static_cast<std::size_t>(i)];
            acc = acc + t;
        }
        return acc;
    }

    // Formal partial derivative with respect to variable 0, 1 or 2.
    HomogeneousPoly partial(int var) const {
        if (degree_ < 1) throw Error("partial of degree-0 form");
        HomogeneousPoly out(degree_ - 1);
        for (const auto& [e, coef] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exponents d = e;
            d[static_cast<std::size_t>(var)] = k - 1;
            out.add_term(d, coef * from_int(coef, k));
        }
        return out;
    }

    HomogeneousPoly operator-() const {
        HomogeneousPoly out(degree_);
        for (const auto& [e, coef] : terms_) out.add_term(e, -coef);
        return out;
    }
    friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.degree_ != b.degree_) throw Error("adding forms of different degree");
        HomogeneousPoly out = a;
        for (const auto& [e, coef] : b.terms_) out.add_term(e, coef);
        return out;
    }
    friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a + (-b);
    }
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        HomogeneousPoly out(a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }
    HomogeneousPoly scaled(const K& s) const {
        HomogeneousPoly out(degree_);
        for (const auto& [e, coef] : terms_) out.add_term(e, coef * s);
        return out;
    }

    // Signed sum of "coef*x^a*y^b*z^c" in canonical term order.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, coef] : terms_) {
            std::string c = scalar_str(coef);
            bool neg = !c.empty() && c[0] == '-';
            if (out.empty()) {
                if (neg) {
                    out += "-";
                    c = c.substr(1);
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            bool parens = c.find_first_of("+-") != std::string::npos ||
                          c.find('i') != std::string::npos ||
                          c.find('t') != std::string::npos;
            bool has_vars = e[0] + e[1] + e[2] > 0;
            bool unit = !parens && c == "1";
            if (!unit || !has_vars) out += parens ? "(" + c + ")" : c;
            static const char* names[3] = {"x", "y", "z"};
            bool first_var = true;
            for (int i = 0; i < 3; ++i) {
                int k = e[static_cast<std::size_t>(i)];
                if (k == 0) continue;
                if (!first_var || !unit) out += "*";
                first_var = false;
                out += names[i];
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    int degree_;
    std::map<Exponents, K, TermOrder> terms_;
};

template <class K>
    requires is_exact_v<K>
bool operator==(const HomogeneousPoly<K>& a, const HomogeneousPoly<K>& b) {
    if (a.degree() != b.degree() || a.terms().size() != b.terms().size()) return false;
    auto ib = b.terms().begin();
    for (const auto& [e, c] : a.terms()) {
        if (!(ib->first == e) || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

// det of the 3x3 matrix of second partials; degree 3(d-2).
template <class K>
HomogeneousPoly<K> hessian(const HomogeneousPoly<K>& f) {
    if (f.degree() < 2) throw Error("hessian needs degree >= 2");
    std::array<std::array<HomogeneousPoly<K>, 3>, 3> h{
        {{f.partial(0).partial(0), f.partial(0).partial(1), f.partial(0).partial(2)},
         {f.partial(1).partial(0), f.partial(1).partial(1), f.partial(1).partial(2)},
         {f.partial(2).partial(0), f.partial(2).partial(1), f.partial(2).partial(2)}}};
    auto minor = [&](int i0, int i1, int j0, int j1) {
        return h[i0][j0] * h[i1][j1] - h[i0][j1] * h[i1][j0];
    };
    return h[0][0] * minor(1, 2, 1, 2) - h[0][1] * minor(1, 2, 0, 2) +
           h[0][2] * minor(1, 2, 0, 1);
}

// Euler check helper: x*Fx + y*Fy + z*Fz (equals d*F for homogeneous F).
template <class K>
HomogeneousPoly<K> euler_combination(const HomogeneousPoly<K>& f) {
    HomogeneousPoly<K> out(f.degree());
    for (int v = 0; v < 3; ++v) {
        Exponents e{0, 0, 0};
        e[static_cast<std::size_t>(v)] = 1;
        HomogeneousPoly<K> p = f.partial(v);
        for (const auto& [pe, pc] : p.terms())
            out.add_term({pe[0] + e[0], pe[1] + e[1], pe[2] + e[2]}, pc);
    }
    return out;
}

} // namespace wlab

#endif
