// Faces of the cube [-1,1]^n, exact integration of polynomial forms over
// faces, the moment functionals u -> int_f tr_f u ^ q, their count, the
// unisolvence matrix, and the minimality dimension identity.

#ifndef TSF_DOF_HPP
#define TSF_DOF_HPP

#include <utility>
#include <vector>

#include "tsf/spaces.hpp"

namespace tsf {

struct Face {
  int n = 0;
  // (axis, value) with value in {-1,+1}, ascending by axis.
  std::vector<std::pair<int, int>> pinned;
  // Remaining axes, ascending; the face's own coordinates in this order.
  std::vector<int> free_axes;

  int dim() const { return static_cast<int>(free_axes.size()); }
};

// All d-faces of [-1,1]^n: free-axis sets lexicographic, then pinned sign
// patterns lexicographic (-1 before +1).  Count = 2^(n-d) * C(n,d).
std::vector<Face> faces(int n, int d);

// Integral over [-1,1]^d of a d-form written in the face's own coordinates;
// per monomial the product of 1-D integrals (0 for odd powers, 2/(a+1) else).
Rational integrate_over_face(const PolyForm& w);

// Iterated axis traces over the pinned coordinates (highest axis first),
// relabelling so the result lives on R^d in the free-axis order.
PolyForm trace_to_face(const PolyForm& u, const Face& f);

struct DofFunctional {
  Face face;
  PolyForm weight;  // (d-k)-form on the face's d coordinates
  enum class Part { P, DH } part;
};

// The functionals indexed by P_{r-2(d-k)-1} Lambda^{d-k}(f) and
// dH_{r-2(d-k)+1} Lambda^{d-k-1}(f) over all faces with
// k <= d <= min(n, floor(r/2)+k).
std::vector<DofFunctional> dof_functionals(int n, int k, int r);

// The closed-form count (double binomial sum, zero convention).
Integer dof_count(int n, int k, int r);

// The d = n summand only (functionals attached to the cube interior).
Integer interior_dof_count(int n, int k, int r);

Rational apply_dof(const DofFunctional& phi, const PolyForm& u);

struct UnisolvenceReport {
  int rows = 0;        // functionals
  int cols = 0;        // dim S_r^- Lambda^k
  int rank = 0;
  bool square = false;
  bool unisolvent = false;  // square and full rank
  int kernel_dim = 0;
};

UnisolvenceReport unisolvence_check(int n, int k, int r);

// Interior count == dim P_{r-2(n-k)-1} Lambda^{n-k} + dim dH_{r-2(n-k)+1}
// Lambda^{n-k-1}, the bookkeeping identity behind minimality.
bool minimality_identity(int n, int k, int r);

}  // namespace tsf

#endif  // TSF_DOF_HPP
