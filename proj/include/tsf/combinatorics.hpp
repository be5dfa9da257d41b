// Binomial coefficients with the zero-fill convention, and canonical
// enumeration of multi-indices and increasing index sets.

#ifndef TSF_COMBINATORICS_HPP
#define TSF_COMBINATORICS_HPP

#include <vector>

#include "tsf/rational.hpp"

namespace tsf {

// Exponent vector of length n, entries >= 0.
using MultiIndex = std::vector<int>;

// Strictly increasing subset of {1,...,n}.
using IndexSet = std::vector<int>;

// C(a,b) under the convention: 0 whenever b < 0 or a < b.
// Total on all integer inputs; dimension formulas rely on the zero fill.
Integer binom(long a, long b);

inline int degree(const MultiIndex& alpha) {
  int d = 0;
  for (int e : alpha) d += e;
  return d;
}

// All alpha with |alpha| = r, first coordinate decreasing fastest:
// (2,2) -> (2,0),(1,1),(0,2).  Count = C(n+r-1, r).
std::vector<MultiIndex> enumerate_multi_indices(int n, int r);

// All alpha with |alpha| <= r, by total degree then the order above.
std::vector<MultiIndex> enumerate_multi_indices_up_to(int n, int r);

// All k-subsets of {1,...,n} in lexicographic order.  Count = C(n,k).
std::vector<IndexSet> enumerate_index_sets(int n, int k);

}  // namespace tsf

#endif  // TSF_COMBINATORICS_HPP
