// Polynomial differential forms on R^n with exact rational coefficients,
// stored as a canonical sparse sum of terms x^alpha dx_sigma.
//
// Operators: exterior derivative, Koszul contraction, wedge product, trace
// onto an axis-aligned hyperplane, linear degree, homogeneous components.

#ifndef TSF_POLYFORM_HPP
#define TSF_POLYFORM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsf/combinatorics.hpp"
#include "tsf/rational.hpp"

namespace tsf {

// (alpha, sigma); ordered by the default lexicographic vector comparison.
// This single global ordering fixes the coordinate system for all echelon
// computations in linalg.hpp, so echelon bases are reproducible bit-for-bit.
using TermKey = std::pair<MultiIndex, IndexSet>;

class PolyForm {
 public:
  // Zero k-form on R^n.  k may lie outside [0,n] (e.g. d of an n-form,
  // kappa of a 0-form); such forms are identically zero.
  PolyForm(int n, int k);

  // Single term c * x^alpha dx_sigma; sigma need not be sorted, the
  // permutation sign is absorbed into the coefficient.  A repeated index in
  // sigma yields the zero form.
  static PolyForm monomial(int n, const MultiIndex& alpha,
                           const IndexSet& sigma, const Rational& coeff = 1);

  int n() const { return n_; }
  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, Rational>& terms() const { return terms_; }

  // Accumulate c * x^alpha dx_sigma; sigma must already be strictly
  // increasing.  Drops the entry if the total cancels.
  void add_term(const MultiIndex& alpha, const IndexSet& sigma,
                const Rational& coeff);

  PolyForm& operator+=(const PolyForm& other);
  PolyForm& operator-=(const PolyForm& other);
  PolyForm& operator*=(const Rational& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, PolyForm f) { return f *= c; }

  bool operator==(const PolyForm& other) const;

 private:
  int n_;
  int k_;
  std::map<TermKey, Rational> terms_;
};

PolyForm exterior_derivative(const PolyForm& w);
PolyForm koszul(const PolyForm& w);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Pullback onto the hyperplane x_axis = c (axis is 1-based).  Coordinates
// j > axis are relabelled to j-1; the result lives on R^{n-1}.
PolyForm trace(const PolyForm& w, int axis, const Rational& c);

// Coefficient-wise d/dx_axis (no dx factor added).
PolyForm partial(const PolyForm& w, int axis);

// #{i in complement(sigma) : alpha_i = 1}.
int linear_degree(const MultiIndex& alpha, const IndexSet& sigma);

// Minimum over terms; throws std::domain_error on the zero form.
int linear_degree(const PolyForm& w);

// Sub-sum of terms with |alpha| = r.
PolyForm homogeneous_component(const PolyForm& w, int r);

// Largest |alpha| present; -1 for the zero form.
int max_degree(const PolyForm& w);

// Canonical rendering, e.g. "(3/2) x1^2 x3 dx1^dx4".
std::string to_string(const PolyForm& w);

}  // namespace tsf

#endif  // TSF_POLYFORM_HPP
