#ifndef WLAB_MATRIX_HPP
#define WLAB_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "wlab/errors.hpp"
#include "wlab/field.hpp"

namespace wlab {

// Dense matrix over one scalar backend. The pipeline never sees anything
// larger than 19x10, so no cleverness here.
template <class K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix zero(std::size_t rows, std::size_t cols, const K& proto) {
        return Matrix(rows, cols, zero_like(proto));
    }
    static Matrix identity(std::size_t n, const K& proto) {
        Matrix m = zero(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_, e_.empty() ? K() : e_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

namespace detail {

// Is x invertible? For fields every nonzero element is; quotient-ring
// backends override via inv_of throwing.
template <class K>
bool try_unit(const K& x) {
    if (exact_zero(x)) return false;
    try {
        (void)inv_of(x);
        return true;
    } catch (const ZeroDivisorError&) {
        return false;
    }
}

} // namespace detail

// Fraction-free (Bareiss) elimination with full pivoting over an exact
// backend. Pivots are required to be units so the synthetic divisions
// stay exact even over a square-free-but-reducible quotient ring; a
// submatrix whose nonzero entries are all zero divisors is an error.
template <class K>
std::size_t rank_exact(Matrix<K> a) {
    static_assert(is_exact_v<K>);
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return 0;
    K prev = one_like(a.at(0, 0));
    std::size_t r = 0;
    for (std::size_t k = 0; k < m && r < n; ++k) {
        // Find a unit pivot in the remaining submatrix.
        bool found = false, saw_nonzero = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = k; i < m && !found; ++i)
            for (std::size_t j = r; j < n && !found; ++j) {
                if (exact_zero(a.at(i, j))) continue;
                saw_nonzero = true;
                if (detail::try_unit(a.at(i, j))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) {
            if (saw_nonzero)
                throw ZeroDivisorError(
                    "rank: every remaining nonzero entry is a zero divisor; "
                    "the minimal polynomial is not irreducible enough for "
                    "this computation",
                    "");
            return r;
        }
        a.swap_rows(k, pi);
        a.swap_cols(r, pj);
        const K piv = a.at(k, r);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                K num = piv * a.at(i, j) - a.at(i, r) * a.at(k, j);
                a.at(i, j) = num / prev;
            }
            a.at(i, r) = zero_like(piv);
        }
        prev = piv;
        ++r;
    }
    return r;
}

// Gaussian elimination with complete pivoting; pivot magnitudes below
// tau * (largest pivot) count as rank drops. MagF(k) must return an
// ordered magnitude type.
template <class K, class MagF, class Mag>
std::size_t rank_numeric(Matrix<K> a, MagF magnitude, const Mag& tau) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return 0;
    std::size_t r = 0;
    bool have_scale = false;
    Mag scale = tau; // overwritten on first pivot
    for (std::size_t k = 0; k < m && r < n; ++k) {
        std::size_t pi = k, pj = r;
        Mag best = magnitude(a.at(k, r));
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = r; j < n; ++j) {
                Mag cur = magnitude(a.at(i, j));
                if (cur > best) {
                    best = cur;
                    pi = i;
                    pj = j;
                }
            }
        if (!have_scale) {
            scale = best * tau;
            have_scale = true;
        }
        if (!(best > scale)) return r; // everything left is noise
        a.swap_rows(k, pi);
        a.swap_cols(r, pj);
        const K piv = a.at(k, r);
        const K piv_inv = inv_of(piv);
        for (std::size_t i = k + 1; i < m; ++i) {
            K f = a.at(i, r) * piv_inv;
            for (std::size_t j = r + 1; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
            a.at(i, r) = zero_like(piv);
        }
        ++r;
    }
    return r;
}

// Determinant over an exact backend (Bareiss; last pivot is the det).
template <class K>
K det_exact(Matrix<K> a) {
    static_assert(is_exact_v<K>);
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) throw Error("det: empty matrix");
    K prev = one_like(a.at(0, 0));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // unit pivot in column range [k, n)
        std::size_t pi = n, pj = n;
        bool saw_nonzero = false;
        for (std::size_t i = k; i < n && pi == n; ++i)
            for (std::size_t j = k; j < n && pi == n; ++j) {
                if (exact_zero(a.at(i, j))) continue;
                saw_nonzero = true;
                if (detail::try_unit(a.at(i, j))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == n) {
            if (saw_nonzero)
                throw ZeroDivisorError("det: no unit pivot available", "");
            return zero_like(a.at(0, 0));
        }
        if (pi != k) sign = -sign;
        if (pj != k) sign = -sign;
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        const K piv = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (piv * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = zero_like(piv);
        }
        prev = piv;
    }
    K d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Determinant via LU with partial pivoting, for the float backend.
template <class K, class MagF>
K det_numeric(Matrix<K> a, MagF magnitude) {
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) throw Error("det: empty matrix");
    K d = one_like(a.at(0, 0));
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k;
        auto best = magnitude(a.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            auto cur = magnitude(a.at(i, k));
            if (cur > best) {
                best = cur;
                pi = i;
            }
        }
        if (pi != k) {
            a.swap_rows(k, pi);
            sign = -sign;
        }
        const K piv = a.at(k, k);
        if (exact_zero(piv)) return zero_like(piv);
        d = d * piv;
        const K piv_inv = inv_of(piv);
        for (std::size_t i = k + 1; i < n; ++i) {
            K f = a.at(i, k) * piv_inv;
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
    }
    return sign < 0 ? -d : d;
}

// Kernel basis over an exact backend via Gauss-Jordan with unit pivots.
// Returns vectors of length cols(); basis size = cols - rank.
template <class K>
std::vector<std::vector<K>> kernel_exact(Matrix<K> a, const K& proto) {
    static_assert(is_exact_v<K>);
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t pi = m;
        bool saw_nonzero = false;
        for (std::size_t i = r; i < m; ++i) {
            if (exact_zero(a.at(i, col))) continue;
            saw_nonzero = true;
            if (detail::try_unit(a.at(i, col))) {
                pi = i;
                break;
            }
        }
        if (pi == m) {
            if (saw_nonzero)
                throw ZeroDivisorError("kernel: no unit pivot in column", "");
            continue;
        }
        a.swap_rows(r, pi);
        K inv = inv_of(a.at(r, col));
        for (std::size_t j = col; j < n; ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || exact_zero(a.at(i, col))) continue;
            K f = a.at(i, col);
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(n, zero_like(proto));
        v[free_col] = one_like(proto);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Numeric kernel: eliminate with complete pivoting at threshold
// tau * |first pivot|, then back-substitute the free columns.
template <class K, class MagF, class Mag>
std::vector<std::vector<K>> kernel_numeric(Matrix<K> a, const K& proto,
                                           MagF magnitude, const Mag& tau) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> col_of(n);
    for (std::size_t j = 0; j < n; ++j) col_of[j] = j;
    std::size_t r = 0;
    bool have_scale = false;
    Mag scale = tau;
    for (std::size_t k = 0; k < m && r < n; ++k) {
        std::size_t pi = k, pj = r;
        Mag best = magnitude(a.at(k, r));
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = r; j < n; ++j) {
                Mag cur = magnitude(a.at(i, j));
                if (cur > best) {
                    best = cur;
                    pi = i;
                    pj = j;
                }
            }
        if (!have_scale) {
            scale = best * tau;
            have_scale = true;
        }
        if (!(best > scale)) break;
        a.swap_rows(k, pi);
        a.swap_cols(r, pj);
        std::swap(col_of[r], col_of[pj]);
        const K piv_inv = inv_of(a.at(k, r));
        for (std::size_t j = r; j < n; ++j) a.at(k, j) = a.at(k, j) * piv_inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == k) continue;
            K f = a.at(i, r);
            if (exact_zero(f)) continue;
            for (std::size_t j = r; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
        ++r;
    }
    std::vector<std::vector<K>> basis;
    for (std::size_t free_idx = r; free_idx < n; ++free_idx) {
        std::vector<K> v(n, zero_like(proto));
        v[col_of[free_idx]] = one_like(proto);
        for (std::size_t i = 0; i < r; ++i) v[col_of[i]] = -a.at(i, free_idx);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wlab

#endif
