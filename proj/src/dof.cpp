#include "tsf/dof.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsf {

std::vector<Face> faces(int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("faces: d outside [0,n]");
  std::vector<Face> out;
  for (const auto& free : enumerate_index_sets(n, d)) {
    std::vector<int> pinned_axes;
    for (int i = 1; i <= n; ++i)
      if (!std::binary_search(free.begin(), free.end(), i))
        pinned_axes.push_back(i);
    int p = n - d;
    for (int mask = 0; mask < (1 << p); ++mask) {
      Face f;
      f.n = n;
      f.free_axes = free;
      for (int b = 0; b < p; ++b)
        f.pinned.emplace_back(pinned_axes[b], (mask >> (p - 1 - b)) & 1 ? 1 : -1);
      out.push_back(std::move(f));
    }
  }
  return out;
}

Rational integrate_over_face(const PolyForm& w) {
  int d = w.n();
  if (w.k() != d)
    throw std::invalid_argument("integrate_over_face: need a d-form on d variables");
  Rational total(0);
  for (const auto& [key, c] : w.terms()) {
    Rational v = c;
    bool odd = false;
    for (int e : key.first) {
      if (e % 2 != 0) {
        odd = true;
        break;
      }
      v *= Rational(2, e + 1);
    }
    if (!odd) total += v;
  }
  return total;
}

PolyForm trace_to_face(const PolyForm& u, const Face& f) {
  if (u.n() != f.n)
    throw std::invalid_argument("trace_to_face: mismatched ambient dimension");
  PolyForm w = u;
  // Highest pinned axis first so lower axis labels stay valid.
  for (auto it = f.pinned.rbegin(); it != f.pinned.rend(); ++it)
    w = trace(w, it->first, Rational(it->second));
  return w;
}

std::vector<DofFunctional> dof_functionals(int n, int k, int r) {
  if (n < 1 || k < 0 || k > n || r < 1)
    throw std::invalid_argument("dof_functionals: bad (n,k,r)");
  std::vector<DofFunctional> out;
  int dmax = std::min(n, r / 2 + k);
  for (int d = k; d <= dmax; ++d) {
    // Weight bases on the d-dimensional reference face, shared by all faces.
    std::vector<PolyForm> weights;
    std::vector<DofFunctional::Part> parts;
    FormSpace p_weights = space_P(d, d - k, r - 2 * (d - k) - 1);
    for (const auto& q : p_weights.basis()) {
      weights.push_back(q);
      parts.push_back(DofFunctional::Part::P);
    }
    if (d > k) {
      SpaceKind dh = SpaceKind::d_of(SpaceKind::simple(SpaceTag::H));
      FormSpace dh_weights = generate_space(dh, d, d - k, r - 2 * (d - k) + 1);
      for (const auto& q : dh_weights.basis()) {
        weights.push_back(q);
        parts.push_back(DofFunctional::Part::DH);
      }
    }
    if (weights.empty()) continue;
    for (const auto& f : faces(n, d))
      for (size_t i = 0; i < weights.size(); ++i)
        out.push_back(DofFunctional{f, weights[i], parts[i]});
  }
  return out;
}

namespace {

// Per-face count of (eq. of Section 4): P part + dH part.
Integer per_face_count(int n, int k, int r, int d) {
  Integer p_part = binom(r - d + 2 * k - 1, r - d + k - 1) *
                   binom(r - d + k - 1, d - k);
  Integer dh_part = binom(r - d + 2 * k, k) * binom(r - d + k - 1, d - k - 1);
  (void)n;
  return p_part + dh_part;
}

}  // namespace

Integer dof_count(int n, int k, int r) {
  Integer total = 0;
  int dmax = std::min(n, r / 2 + k);
  for (int d = k; d <= dmax; ++d)
    total += (binom(n, d) << (n - d)) * per_face_count(n, k, r, d);
  return total;
}

Integer interior_dof_count(int n, int k, int r) {
  if (n > std::min(n, r / 2 + k) || n < k) return 0;
  return per_face_count(n, k, r, n);
}

Rational apply_dof(const DofFunctional& phi, const PolyForm& u) {
  PolyForm traced = trace_to_face(u, phi.face);
  return integrate_over_face(wedge(traced, phi.weight));
}

UnisolvenceReport unisolvence_check(int n, int k, int r) {
  FormSpace space = space_Sminus(n, k, r);
  auto dofs = dof_functionals(n, k, r);
  QMatrix m(static_cast<int>(dofs.size()), space.dim());
  for (size_t i = 0; i < dofs.size(); ++i)
    for (int j = 0; j < space.dim(); ++j)
      m.a[i][j] = apply_dof(dofs[i], space.basis()[j]);
  UnisolvenceReport rep;
  rep.rows = m.rows;
  rep.cols = m.cols;
  rep.kernel_dim = static_cast<int>(nullspace(m).size());
  rep.rank = rref(m);
  rep.square = rep.rows == rep.cols;
  rep.unisolvent = rep.square && rep.rank == rep.cols;
  return rep;
}

bool minimality_identity(int n, int k, int r) {
  Integer lhs = interior_dof_count(n, k, r);
  Integer rhs = dim_P(n, n - k, r - 2 * (n - k) - 1) +
                dim_dH(n, n - k - 1, r - 2 * (n - k) + 1);
  return lhs == rhs;
}

}  // namespace tsf
