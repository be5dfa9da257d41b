#include "tsf/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsf {

namespace {

bool bad_order(int n, int k) { return k < 0 || k > n; }

// f_{r,k}: |S_r Lambda^k| minus |kappa P_r Lambda^k| + |kappa P_{r-1} Lambda^{k+1}|,
// expanded in binomials under the zero convention.  Valid for r >= 1.
Integer f_rk(int n, int r, int k) {
  Integer a = 0;
  int dmax = std::min(n, r / 2 + k);
  for (int d = k; d <= dmax; ++d) {
    Integer cell = binom(n, d) * binom(r - d + 2 * k, d) * binom(d, k);
    a += cell << (n - d);
  }
  Integer b = 0;
  for (int j = 0; j <= r; ++j) b += binom(n + j - 1, j);
  b *= binom(n, k);
  return a - b;
}

}  // namespace

Integer dim_H(int n, int k, int r) {
  if (r < 0 || bad_order(n, k)) return 0;
  return binom(n + r - 1, r) * binom(n, k);
}

Integer dim_P(int n, int k, int r) {
  if (r < 0 || bad_order(n, k)) return 0;
  return binom(r + n, r + k) * binom(r + k, k);
}

Integer dim_Pminus(int n, int k, int r) {
  if (r < 1 || bad_order(n, k)) return 0;
  return binom(r + n, r + k) * binom(r + k - 1, k);
}

Integer dim_kappaH(int n, int k, int r) {
  if (r < 0 || k < 1 || k > n) return 0;
  return binom(n + r, n - k) * binom(r + k - 1, k - 1);
}

Integer dim_dH(int n, int k, int r) { return dim_kappaH(n, k + 1, r - 1); }

Integer dim_J(int n, int k, int r) {
  if (r < 1 || bad_order(n, k)) return 0;
  Integer j = 0;
  for (int i = 0; i <= k; ++i) {
    Integer f = f_rk(n, r + i, k - i);
    j += (i % 2 == 0) ? f : -f;
  }
  return j;
}

Integer dim_S(int n, int k, int r) {
  if (r < 0 || bad_order(n, k)) return 0;
  return dim_P(n, k, r) + dim_J(n, k, r) + dim_J(n, k - 1, r + 1);
}

Integer dim_Sminus(int n, int k, int r) {
  if (r < 1 || bad_order(n, k)) return 0;
  return dim_Pminus(n, k, r) + dim_J(n, k, r) + dim_J(n, k - 1, r);
}

Integer dim_Qminus(int n, int k, int r) {
  if (r < 1 || bad_order(n, k)) return 0;
  Integer rk = 1, rp = 1;
  for (int i = 0; i < k; ++i) rk *= r;
  for (int i = 0; i < n - k; ++i) rp *= r + 1;
  return binom(n, k) * rk * rp;
}

Integer appendix_b_dim(int n, int k, int r) {
  if (n != 2 && n != 3) throw std::invalid_argument("appendix_b_dim: n must be 2 or 3");
  if (bad_order(n, k) || r < 1)
    throw std::invalid_argument("appendix_b_dim: bad (k,r)");
  if (n == 2) {
    switch (k) {
      case 0: return 4 + 4 * (r - 1) + binom(r - 2, 2);
      case 1: return r == 1 ? Integer(4) : Integer(r) * r + 2 * r + 2;
      default: return binom(r + 1, 2);
    }
  }
  // n == 3; piecewise J-dimensions from the proof.
  Integer j0 = r == 1 ? 4 : (r == 2 ? 10 : 3 * (r + 1));
  Integer j1 = r == 1 ? 2 : 3 * r;
  switch (k) {
    case 0: return binom(r + 3, 3) + j0;
    case 1:
      if (r == 1) return 12;
      if (r == 2) return 36;
      return Integer(r) * binom(r + 3, 2) + 3 * r + 3 * (r + 1);
    case 2: return Integer(r + 3) * binom(r + 1, 2) + j1;
    default: return binom(r + 2, 3);
  }
}

FormSpace space_H(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 0 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens;
  for (const auto& alpha : enumerate_multi_indices(n, r))
    for (const auto& sigma : enumerate_index_sets(n, k))
      gens.push_back(PolyForm::monomial(n, alpha, sigma));
  return FormSpace::span(n, k, gens);
}

FormSpace space_H_linear(int n, int k, int r, int ell) {
  FormSpace zero(n, k);
  if (r < 0 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens;
  for (const auto& alpha : enumerate_multi_indices(n, r))
    for (const auto& sigma : enumerate_index_sets(n, k))
      if (linear_degree(alpha, sigma) >= ell)
        gens.push_back(PolyForm::monomial(n, alpha, sigma));
  return FormSpace::span(n, k, gens);
}

FormSpace space_P(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 0 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens;
  for (const auto& alpha : enumerate_multi_indices_up_to(n, r))
    for (const auto& sigma : enumerate_index_sets(n, k))
      gens.push_back(PolyForm::monomial(n, alpha, sigma));
  return FormSpace::span(n, k, gens);
}

FormSpace space_Pminus(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 1 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens = space_P(n, k, r - 1).basis();
  FormSpace h = space_H(n, k + 1, r - 1);
  for (const auto& f : h.basis()) gens.push_back(koszul(f));
  return FormSpace::span(n, k, gens);
}

FormSpace space_J(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 1 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens;
  // H_{r+l-1,l} Lambda^{k+1} vanishes for l > n-(k+1).
  for (int ell = 1; ell <= n - k - 1; ++ell) {
    FormSpace h = space_H_linear(n, k + 1, r + ell - 1, ell);
    for (const auto& m : h.basis()) gens.push_back(koszul(m));
  }
  return FormSpace::span(n, k, gens);
}

FormSpace space_J_char(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 1 || bad_order(n, k) || k + 1 > n) return zero;
  std::vector<PolyForm> gens;
  // kappa m over (k+1)-form monomials with deg m >= r and
  // deg m - ldeg m <= r-1; ldeg <= n-k-1 bounds the degree range.
  for (int deg = r; deg <= r + n - k - 2; ++deg)
    for (const auto& alpha : enumerate_multi_indices(n, deg))
      for (const auto& sigma : enumerate_index_sets(n, k + 1))
        if (deg - linear_degree(alpha, sigma) <= r - 1)
          gens.push_back(koszul(PolyForm::monomial(n, alpha, sigma)));
  return FormSpace::span(n, k, gens);
}

FormSpace space_S(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 0 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens = space_P(n, k, r).basis();
  FormSpace j = space_J(n, k, r);
  for (const auto& f : j.basis()) gens.push_back(f);
  FormSpace j_prev = space_J(n, k - 1, r + 1);
  for (const auto& f : j_prev.basis()) gens.push_back(exterior_derivative(f));
  return FormSpace::span(n, k, gens);
}

FormSpace space_Sminus(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 1 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens = space_S(n, k, r - 1).basis();
  FormSpace s_up = space_S(n, k + 1, r - 1);
  for (const auto& f : s_up.basis()) gens.push_back(koszul(f));
  return FormSpace::span(n, k, gens);
}

FormSpace space_Sminus_decomp(int n, int k, int r) {
  FormSpace zero(n, k);
  if (r < 1 || bad_order(n, k)) return zero;
  std::vector<PolyForm> gens = space_Pminus(n, k, r).basis();
  FormSpace j = space_J(n, k, r);
  for (const auto& f : j.basis()) gens.push_back(f);
  FormSpace j_prev = space_J(n, k - 1, r);
  for (const auto& f : j_prev.basis()) gens.push_back(exterior_derivative(f));
  return FormSpace::span(n, k, gens);
}

FormSpace generate_space(const SpaceKind& kind, int n, int k, int r) {
  if (bad_order(n, k))
    throw std::invalid_argument("generate_space: k outside [0,n]");
  switch (kind.tag) {
    case SpaceTag::H: return space_H(n, k, r);
    case SpaceTag::HLinear: return space_H_linear(n, k, r, kind.ell);
    case SpaceTag::P: return space_P(n, k, r);
    case SpaceTag::Pminus: return space_Pminus(n, k, r);
    case SpaceTag::J: return space_J(n, k, r);
    case SpaceTag::JViaChar: return space_J_char(n, k, r);
    case SpaceTag::S: return space_S(n, k, r);
    case SpaceTag::Sminus: return space_Sminus(n, k, r);
    case SpaceTag::DOf: {
      FormSpace inner = k >= 1 ? generate_space(*kind.inner, n, k - 1, r)
                               : FormSpace(n, -1);
      return image(inner, [](const PolyForm& f) { return exterior_derivative(f); },
                   n, k);
    }
    case SpaceTag::KappaOf: {
      FormSpace inner = k + 1 <= n ? generate_space(*kind.inner, n, k + 1, r)
                                   : FormSpace(n, k + 1);
      return image(inner, [](const PolyForm& f) { return koszul(f); }, n, k);
    }
    case SpaceTag::QminusDimOnly:
      throw std::invalid_argument("generate_space: Qminus is dimension-only");
  }
  throw std::logic_error("generate_space: unreachable");
}

Integer dim_formula(const SpaceKind& kind, int n, int k, int r) {
  switch (kind.tag) {
    case SpaceTag::H: return dim_H(n, k, r);
    case SpaceTag::HLinear: {
      // No closed form in use; count the monomial basis.
      if (r < 0 || bad_order(n, k)) return 0;
      Integer count = 0;
      for (const auto& alpha : enumerate_multi_indices(n, r))
        for (const auto& sigma : enumerate_index_sets(n, k))
          if (linear_degree(alpha, sigma) >= kind.ell) ++count;
      return count;
    }
    case SpaceTag::P: return dim_P(n, k, r);
    case SpaceTag::Pminus: return dim_Pminus(n, k, r);
    case SpaceTag::J:
    case SpaceTag::JViaChar: return dim_J(n, k, r);
    case SpaceTag::S: return dim_S(n, k, r);
    case SpaceTag::Sminus: return dim_Sminus(n, k, r);
    case SpaceTag::DOf:
      // d is injective on the range of kappa, so |dJ| = |J|; |dH| is classical.
      if (kind.inner->tag == SpaceTag::J) return dim_J(n, k - 1, r);
      if (kind.inner->tag == SpaceTag::H) return dim_dH(n, k - 1, r);
      throw std::invalid_argument("dim_formula: no closed form for this dX");
    case SpaceTag::KappaOf:
      if (kind.inner->tag == SpaceTag::H) return dim_kappaH(n, k + 1, r);
      if (kind.inner->tag == SpaceTag::J) return 0;  // J lies in range of kappa
      throw std::invalid_argument("dim_formula: no closed form for this kappaX");
    case SpaceTag::QminusDimOnly: return dim_Qminus(n, k, r);
  }
  throw std::logic_error("dim_formula: unreachable");
}

SpaceKind parse_space_kind(const std::string& name) {
  if (name == "H") return SpaceKind::simple(SpaceTag::H);
  if (name == "P") return SpaceKind::simple(SpaceTag::P);
  if (name == "Pminus") return SpaceKind::simple(SpaceTag::Pminus);
  if (name == "J") return SpaceKind::simple(SpaceTag::J);
  if (name == "Jchar") return SpaceKind::simple(SpaceTag::JViaChar);
  if (name == "S") return SpaceKind::simple(SpaceTag::S);
  if (name == "Sminus") return SpaceKind::simple(SpaceTag::Sminus);
  if (name == "Qminus") return SpaceKind::simple(SpaceTag::QminusDimOnly);
  if (name == "dJ") return SpaceKind::d_of(SpaceKind::simple(SpaceTag::J));
  if (name == "kappaH") return SpaceKind::kappa_of(SpaceKind::simple(SpaceTag::H));
  throw std::invalid_argument("unknown space kind: " + name);
}

}  // namespace tsf
