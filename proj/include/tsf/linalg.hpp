// Exact linear algebra over Q for spaces of polynomial differential forms:
// RREF, span, membership, sum/intersection, and images/kernels of linear
// operators.  A FormSpace holds the unique reduced-echelon basis of its span
// relative to the global TermKey coordinate ordering, so two constructions
// of the same space compare equal element-by-element.

#ifndef TSF_LINALG_HPP
#define TSF_LINALG_HPP

#include <functional>
#include <vector>

#include "tsf/polyform.hpp"

namespace tsf {

struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rational>> a;

  QMatrix() = default;
  QMatrix(int r, int c)
      : rows(r), cols(c), a(r, std::vector<Rational>(c, Rational(0))) {}
  static QMatrix identity(int m);
};

// In-place Gauss-Jordan to the unique RREF; returns the rank.
int rref(QMatrix& m);

// Basis of the nullspace {x : Mx = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

class FormSpace {
 public:
  // The zero space of k-forms on R^n.
  FormSpace(int n, int k) : n_(n), k_(k) {}

  static FormSpace span(int n, int k, const std::vector<PolyForm>& forms);

  int n() const { return n_; }
  int k() const { return k_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<PolyForm>& basis() const& { return basis_; }
  // Calling basis() on a temporary yields a copy so the range stays alive.
  std::vector<PolyForm> basis() && { return std::move(basis_); }

  bool contains(const PolyForm& w) const;

  bool operator==(const FormSpace& other) const;

 private:
  int n_;
  int k_;
  std::vector<PolyForm> basis_;  // reduced echelon, pivots in TermKey order
};

bool subspace(const FormSpace& a, const FormSpace& b);
FormSpace sum(const FormSpace& a, const FormSpace& b);
bool is_direct(const FormSpace& a, const FormSpace& b);
FormSpace intersect(const FormSpace& a, const FormSpace& b);

using FormOp = std::function<PolyForm(const PolyForm&)>;

// Span of op applied to the basis.  (target_n, target_k) describe op's
// codomain so the image of the zero space is typed correctly.
FormSpace image(const FormSpace& s, const FormOp& op, int target_n,
                int target_k);

// {w in s : op(w) = 0}.
FormSpace kernel(const FormSpace& s, const FormOp& op, int target_n,
                 int target_k);

}  // namespace tsf

#endif  // TSF_LINALG_HPP
