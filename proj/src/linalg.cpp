#include "tsf/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsf {

QMatrix QMatrix::identity(int m) {
  QMatrix out(m, m);
  for (int i = 0; i < m; ++i) out.a[i][i] = 1;
  return out;
}

int rref(QMatrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < m.rows; ++row)
      if (m.a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m.a[rank], m.a[pivot]);
    Rational inv = 1 / m.a[rank][col];
    for (int j = col; j < m.cols; ++j) m.a[rank][j] *= inv;
    for (int row = 0; row < m.rows; ++row) {
      if (row == rank || m.a[row][col] == 0) continue;
      Rational factor = m.a[row][col];
      for (int j = col; j < m.cols; ++j)
        m.a[row][j] -= factor * m.a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  QMatrix r = m;
  int rank = rref(r);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0, col = 0; row < rank; ++row) {
    while (col < m.cols && r.a[row][col] == 0) ++col;
    pivot_col[row] = col;
    is_pivot[col] = true;
  }
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = 1;
    for (int row = 0; row < rank; ++row) v[pivot_col[row]] = -r.a[row][free];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Sorted union of the term keys of a set of forms; the column order for all
// coordinate matrices.
std::vector<TermKey> key_union(const std::vector<PolyForm>& forms) {
  std::set<TermKey> keys;
  for (const auto& f : forms)
    for (const auto& [key, c] : f.terms()) keys.insert(key);
  return {keys.begin(), keys.end()};
}

QMatrix coordinate_matrix(const std::vector<PolyForm>& forms,
                          const std::vector<TermKey>& keys) {
  QMatrix m(static_cast<int>(forms.size()), static_cast<int>(keys.size()));
  for (size_t i = 0; i < forms.size(); ++i) {
    int j = 0;
    for (const auto& key : keys) {
      auto it = forms[i].terms().find(key);
      if (it != forms[i].terms().end()) m.a[i][j] = it->second;
      ++j;
    }
  }
  return m;
}

PolyForm row_to_form(int n, int k, const std::vector<Rational>& row,
                     const std::vector<TermKey>& keys) {
  PolyForm f(n, k);
  for (size_t j = 0; j < keys.size(); ++j)
    if (row[j] != 0) f.add_term(keys[j].first, keys[j].second, row[j]);
  return f;
}

}  // namespace

FormSpace FormSpace::span(int n, int k, const std::vector<PolyForm>& forms) {
  FormSpace out(n, k);
  std::vector<PolyForm> live;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (f.n() != n || f.k() != k)
      throw std::invalid_argument("FormSpace::span: mismatched (n,k)");
    live.push_back(f);
  }
  if (live.empty()) return out;
  auto keys = key_union(live);
  QMatrix m = coordinate_matrix(live, keys);
  int rank = rref(m);
  for (int i = 0; i < rank; ++i)
    out.basis_.push_back(row_to_form(n, k, m.a[i], keys));
  return out;
}

bool FormSpace::contains(const PolyForm& w) const {
  if (w.is_zero()) return true;
  if (w.n() != n_ || w.k() != k_)
    throw std::invalid_argument("FormSpace::contains: mismatched (n,k)");
  // Eliminate w against the echelon basis and test for a zero residual.
  PolyForm residual = w;
  for (const auto& b : basis_) {
    if (residual.is_zero()) return true;
    const TermKey& pivot = b.terms().begin()->first;
    auto it = residual.terms().find(pivot);
    if (it == residual.terms().end()) continue;
    Rational factor = it->second / b.terms().begin()->second;
    residual -= factor * b;
  }
  return residual.is_zero();
}

bool FormSpace::operator==(const FormSpace& other) const {
  return n_ == other.n_ && dim() == other.dim() &&
         (dim() == 0 || k_ == other.k_) && basis_ == other.basis_;
}

bool subspace(const FormSpace& a, const FormSpace& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("subspace: mismatched n");
  for (const auto& f : a.basis())
    if (!b.contains(f)) return false;
  return true;
}

FormSpace sum(const FormSpace& a, const FormSpace& b) {
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  if (a.n() != b.n() || a.k() != b.k())
    throw std::invalid_argument("sum: mismatched (n,k)");
  std::vector<PolyForm> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return FormSpace::span(a.n(), a.k(), all);
}

bool is_direct(const FormSpace& a, const FormSpace& b) {
  return sum(a, b).dim() == a.dim() + b.dim();
}

FormSpace intersect(const FormSpace& a, const FormSpace& b) {
  if (a.dim() == 0) return a;
  if (b.dim() == 0) return b;
  if (a.n() != b.n() || a.k() != b.k())
    throw std::invalid_argument("intersect: mismatched (n,k)");
  // Nullspace of [A^T | B^T]: coefficients (c,d) with sum_i c_i a_i =
  // -sum_j d_j b_j, an element of the intersection.
  std::vector<PolyForm> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  auto keys = key_union(all);
  QMatrix m(static_cast<int>(keys.size()), static_cast<int>(all.size()));
  for (size_t i = 0; i < all.size(); ++i) {
    int row = 0;
    for (const auto& key : keys) {
      auto it = all[i].terms().find(key);
      if (it != all[i].terms().end()) m.a[row][static_cast<int>(i)] = it->second;
      ++row;
    }
  }
  std::vector<PolyForm> gens;
  for (const auto& v : nullspace(m)) {
    PolyForm g(a.n(), a.k());
    for (int i = 0; i < a.dim(); ++i)
      if (v[i] != 0) g += v[i] * a.basis()[i];
    gens.push_back(std::move(g));
  }
  return FormSpace::span(a.n(), a.k(), gens);
}

FormSpace image(const FormSpace& s, const FormOp& op, int target_n,
                int target_k) {
  std::vector<PolyForm> images;
  images.reserve(s.basis().size());
  for (const auto& f : s.basis()) images.push_back(op(f));
  return FormSpace::span(target_n, target_k, images);
}

FormSpace kernel(const FormSpace& s, const FormOp& op, int target_n,
                 int target_k) {
  if (s.dim() == 0) return s;
  std::vector<PolyForm> images;
  images.reserve(s.basis().size());
  for (const auto& f : s.basis()) images.push_back(op(f));
  auto keys = key_union(images);
  QMatrix m(static_cast<int>(keys.size()), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    int row = 0;
    for (const auto& key : keys) {
      auto it = images[i].terms().find(key);
      if (it != images[i].terms().end()) m.a[row][i] = it->second;
      ++row;
    }
  }
  std::vector<PolyForm> gens;
  for (const auto& v : nullspace(m)) {
    PolyForm g(s.n(), s.k());
    for (int i = 0; i < s.dim(); ++i)
      if (v[i] != 0) g += v[i] * s.basis()[i];
    gens.push_back(std::move(g));
  }
  return FormSpace::span(s.n(), s.k(), gens);
}

}  // namespace tsf
