#ifndef WLAB_ROOTS_HPP
#define WLAB_ROOTS_HPP

#include <utility>
#include <vector>

#include "wlab/big_complex.hpp"
#include "wlab/number_field.hpp"
#include "wlab/rational.hpp"
#include "wlab/unipoly.hpp"

namespace wlab {

// A square-free factor of the input that could not be split further over
// the requested exact backend; only its degree and multiplicity class
// are reported.
struct ResidualFactor {
    int degree;
    int multiplicity;
};

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots; // (root, multiplicity)
    std::vector<ResidualFactor> residual;        // irrational part, square-free
};

struct NFRoots {
    std::vector<std::pair<NFElem, int>> roots;
    std::vector<ResidualFactor> residual;
};

// Exact rational roots plus the square-free shape of the irrational part.
RationalRoots isolate_rational_roots(const UniPoly<Rational>& p);

// All complex roots to working precision, clustered into multiplicity
// groups at radius 2^(-prec/3); multiplicities sum to deg p.
std::vector<std::pair<BigComplex, int>> isolate_complex_roots(
    const UniPoly<BigComplex>& p);

// Roots lying in the coefficient field Q[t]/(m): exact rational roots
// always; non-rational members of the field are recognized from a
// high-precision embedding (integer-relation reconstruction) and then
// verified exactly. Unrecognized content is reported as residual.
NFRoots isolate_nf_roots(const UniPoly<NFElem>& p, mpfr_prec_t prec);

// --- lower-level pieces, exposed for tests ---

// Unrefined Aberth-Ehrlich roots (length = degree, multiple roots repeated).
std::vector<BigComplex> aberth_roots(const UniPoly<BigComplex>& p);

// Cluster + multiplicity-aware refinement of aberth output.
std::vector<std::pair<BigComplex, int>> cluster_roots(std::vector<BigComplex> roots,
                                                      const UniPoly<BigComplex>& p);

// Isolating intervals (lo, hi, binary-rational endpoints) for the real
// roots of a square-free integer polynomial; exact roots hit during
// subdivision are returned separately.
struct RealIsolation {
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<Rational> exact_roots;
};
RealIsolation isolate_real_roots(const std::vector<mpz_class>& coeffs);

// The rational with smallest denominator in [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

// LLL-reduce an integer lattice basis (rows); delta = 0.99. In-place.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

// Candidate representations of the complex value `target` as polynomials
// of degree < deg(m) in theta with rational coefficients, where
// theta_embed is a complex root of m. Unverified: the caller must check
// each candidate exactly. One reduced lattice vector per candidate.
std::vector<UniPoly<Rational>> recognize_algebraic(const BigComplex& target,
                                                   const BigComplex& theta_embed,
                                                   int field_degree,
                                                   mpfr_prec_t prec);

// Complex embeddings of a number field: the roots of m, sorted
// deterministically; index 0 is the designated embedding.
std::vector<BigComplex> field_embeddings(const NumberFieldPtr& field,
                                         mpfr_prec_t prec);

// Embed an element under a given image of the generator.
BigComplex embed_nf(const NFElem& x, const BigComplex& theta_embed);

// Embed rational/complex conversions for curves.
UniPoly<BigComplex> embed_poly(const UniPoly<Rational>& p, mpfr_prec_t prec);
UniPoly<BigComplex> embed_poly(const UniPoly<NFElem>& p, const BigComplex& theta_embed);

} // namespace wlab

#endif
