#ifndef WLAB_FIELD_HPP
#define WLAB_FIELD_HPP

#include <string>
#include <type_traits>

namespace wlab {

// Every scalar backend K provides, via ADL:
//   K zero_like(const K&), K one_like(const K&), K from_int(const K&, long)
//   bool exact_zero(const K&)          -- true structural zero only
//   K inv_of(const K&)                 -- throws on zero / zero divisor
//   std::string scalar_str(const K&)   -- external text grammar
// plus value semantics and the usual arithmetic operators.
// Exact backends additionally provide operator==.

template <class K>
struct FieldTraits {
    static constexpr bool is_exact = true;
};

template <class K>
inline constexpr bool is_exact_v = FieldTraits<K>::is_exact;

} // namespace wlab

#endif
