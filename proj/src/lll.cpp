#include <gmpxx.h>
#include <algorithm>

#include <vector>

#include "wlab/roots.hpp"

// Textbook LLL with exact rational Gram-Schmidt, delta = 0.99. The
// lattices here are tiny (dimension <= 10), so simplicity wins.

namespace wlab {

namespace {

using Vec = std::vector<mpz_class>;

mpq_class dotqz(const std::vector<mpq_class>& a, const Vec& b) {
    mpq_class s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * mpq_class(b[i]);
    return s;
}

mpz_class dotzz(const Vec& a, const Vec& b) {
    mpz_class s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Gso {
    std::vector<std::vector<mpq_class>> star; // orthogonalized rows
    std::vector<std::vector<mpq_class>> mu;
    std::vector<mpq_class> norm; // |b*_i|^2

    void compute(const std::vector<Vec>& b) {
        const std::size_t n = b.size(), d = b[0].size();
        star.assign(n, std::vector<mpq_class>(d, mpq_class(0)));
        mu.assign(n, std::vector<mpq_class>(n, mpq_class(0)));
        norm.assign(n, mpq_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < d; ++k) star[i][k] = mpq_class(b[i][k]);
            for (std::size_t j = 0; j < i; ++j) {
                if (sgn(norm[j]) == 0) {
                    mu[i][j] = 0;
                    continue;
                }
                mu[i][j] = dotqz(star[j], b[i]) / norm[j];
                for (std::size_t k = 0; k < d; ++k)
                    star[i][k] -= mu[i][j] * star[j][k];
            }
            mpq_class s(0);
            for (std::size_t k = 0; k < d; ++k) s += star[i][k] * star[i][k];
            norm[i] = s;
        }
    }
};

mpz_class nearest_int(const mpq_class& q) {
    // round half away from zero
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class two_num = 2 * num + (sgn(num) >= 0 ? den : -den);
    mpz_class two_den = 2 * den;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), two_num.get_mpz_t(), two_den.get_mpz_t());
    return r;
}

} // namespace

void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
    if (basis.empty()) return;
    const std::size_t n = basis.size();
    const mpq_class delta(99, 100);
    Gso g;
    g.compute(basis);
    std::size_t k = 1;
    long guard = 0;
    while (k < n && guard++ < 100000) {
        // size reduction, refreshing the GSO after every row operation
        for (std::size_t j = k; j-- > 0;) {
            mpz_class r = nearest_int(g.mu[k][j]);
            if (r != 0) {
                for (std::size_t t = 0; t < basis[k].size(); ++t)
                    basis[k][t] -= r * basis[j][t];
                g.compute(basis);
            }
        }
        // Lovasz condition
        mpq_class lhs = g.norm[k];
        mpq_class rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            g.compute(basis);
            if (k > 1) --k;
        }
    }
    // shortest first
    std::sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
        return dotzz(a, a) < dotzz(b, b);
    });
}

} // namespace wlab
