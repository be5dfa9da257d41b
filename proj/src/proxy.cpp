#include "tsf/proxy.hpp"

#include <sstream>
#include <stdexcept>

namespace tsf {

VectorField VectorField::zero(int n) {
  VectorField v;
  v.n = n;
  v.comp.assign(n, PolyForm(n, 0));
  return v;
}

PolyForm times_dx(const PolyForm& scalar, const IndexSet& sigma) {
  if (scalar.k() != 0)
    throw std::invalid_argument("times_dx: scalar must be a 0-form");
  PolyForm out(scalar.n(), static_cast<int>(sigma.size()));
  for (const auto& [key, c] : scalar.terms()) out.add_term(key.first, sigma, c);
  return out;
}

PolyForm flat(const VectorField& v, int k) {
  if (v.n == 2 && k == 1) {
    PolyForm out(2, 1);
    out += times_dx(v.comp[0], {1});
    out += times_dx(v.comp[1], {2});
    return out;
  }
  if (v.n == 3 && k == 1) {
    PolyForm out(3, 1);
    for (int i = 0; i < 3; ++i) out += times_dx(v.comp[i], {i + 1});
    return out;
  }
  if (v.n == 3 && k == 2) {
    PolyForm out(3, 2);
    out += times_dx(v.comp[0], {2, 3});
    out += Rational(-1) * times_dx(v.comp[1], {1, 3});
    out += times_dx(v.comp[2], {1, 2});
    return out;
  }
  throw std::invalid_argument("flat: unsupported (n,k)");
}

PolyForm flat_scalar(const PolyForm& w, int k) {
  if (w.k() != 0) throw std::invalid_argument("flat_scalar: need a 0-form");
  if (k == 0) return w;
  if (k == w.n()) {
    IndexSet vol;
    for (int i = 1; i <= w.n(); ++i) vol.push_back(i);
    return times_dx(w, vol);
  }
  throw std::invalid_argument("flat_scalar: k must be 0 or n");
}

VectorField rot2d(const VectorField& v) {
  if (v.n != 2) throw std::invalid_argument("rot2d: need n = 2");
  VectorField out = VectorField::zero(2);
  out.comp[0] = v.comp[1];
  out.comp[1] = Rational(-1) * v.comp[0];
  return out;
}

VectorField curl2d(const PolyForm& w) {
  if (w.n() != 2 || w.k() != 0)
    throw std::invalid_argument("curl2d: need a scalar on R^2");
  VectorField out = VectorField::zero(2);
  out.comp[0] = partial(w, 2);
  out.comp[1] = Rational(-1) * partial(w, 1);
  return out;
}

VectorField grad(const PolyForm& w) {
  if (w.k() != 0) throw std::invalid_argument("grad: need a 0-form");
  VectorField out = VectorField::zero(w.n());
  for (int i = 1; i <= w.n(); ++i) out.comp[i - 1] = partial(w, i);
  return out;
}

VectorField curl3d(const VectorField& v) {
  if (v.n != 3) throw std::invalid_argument("curl3d: need n = 3");
  VectorField out = VectorField::zero(3);
  out.comp[0] = partial(v.comp[2], 2) - partial(v.comp[1], 3);
  out.comp[1] = partial(v.comp[0], 3) - partial(v.comp[2], 1);
  out.comp[2] = partial(v.comp[1], 1) - partial(v.comp[0], 2);
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  if (a.n != 3 || b.n != 3) throw std::invalid_argument("cross: need n = 3");
  VectorField out = VectorField::zero(3);
  out.comp[0] = wedge(a.comp[1], b.comp[2]) - wedge(a.comp[2], b.comp[1]);
  out.comp[1] = wedge(a.comp[2], b.comp[0]) - wedge(a.comp[0], b.comp[2]);
  out.comp[2] = wedge(a.comp[0], b.comp[1]) - wedge(a.comp[1], b.comp[0]);
  return out;
}

PolyForm divergence(const VectorField& v) {
  PolyForm out(v.n, 0);
  for (int i = 1; i <= v.n; ++i) out += partial(v.comp[i - 1], i);
  return out;
}

namespace {

PolyForm scalar_monomial(int n, const MultiIndex& alpha) {
  return PolyForm::monomial(n, alpha, {});
}

// Degree-r homogeneous scalar monomials on R^n supported on the given axes.
std::vector<PolyForm> homogeneous_on_axes(int n, int r,
                                          const std::vector<int>& axes) {
  std::vector<PolyForm> out;
  for (const auto& a : enumerate_multi_indices(static_cast<int>(axes.size()), r)) {
    MultiIndex alpha(n, 0);
    for (size_t i = 0; i < axes.size(); ++i) alpha[axes[i] - 1] = a[i];
    out.push_back(scalar_monomial(n, alpha));
  }
  return out;
}

// The position vector as a field.
VectorField position_field(int n) {
  VectorField x = VectorField::zero(n);
  for (int i = 0; i < n; ++i) {
    MultiIndex alpha(n, 0);
    alpha[i] = 1;
    x.comp[i] = scalar_monomial(n, alpha);
  }
  return x;
}

std::vector<VectorField> vector_P(int n, int r) {
  std::vector<VectorField> out;
  for (const auto& a : enumerate_multi_indices_up_to(n, r))
    for (int i = 0; i < n; ++i) {
      VectorField v = VectorField::zero(n);
      v.comp[i] = scalar_monomial(n, a);
      out.push_back(std::move(v));
    }
  return out;
}

// x p for homogeneous p of degree r (all variables).
std::vector<VectorField> x_homogeneous(int n, int r) {
  std::vector<VectorField> out;
  VectorField x = position_field(n);
  for (const auto& a : enumerate_multi_indices(n, r)) {
    PolyForm p = scalar_monomial(n, a);
    VectorField v = VectorField::zero(n);
    for (int i = 0; i < n; ++i) v.comp[i] = wedge(x.comp[i], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Spanning monomials of delta H^{3,I}_s: x_i times degree-s homogeneous
// polynomials in the other two variables, plus x^s y z and its relabelings.
std::vector<PolyForm> delta_H3(int s) {
  std::vector<PolyForm> out;
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> others;
    for (int j = 1; j <= 3; ++j)
      if (j != i) others.push_back(j);
    for (const auto& p : homogeneous_on_axes(3, s, others)) {
      MultiIndex e(3, 0);
      e[i - 1] = 1;
      out.push_back(wedge(scalar_monomial(3, e), p));
    }
  }
  for (int i = 0; i < 3; ++i) {
    MultiIndex alpha(3, 1);
    alpha[i] = s;
    out.push_back(scalar_monomial(3, alpha));
  }
  return out;
}

// Spanning fields of delta E^{3,I}_{s+1}: x_i p (x_j grad x_l - x_l grad x_j)
// over cyclic (i,j,l) with p homogeneous of degree s in x_j, x_l.
std::vector<VectorField> delta_E3(int s) {
  static const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  std::vector<VectorField> out;
  for (const auto& t : cyc) {
    int i = t[0], j = t[1], l = t[2];
    for (const auto& p : homogeneous_on_axes(3, s, {j, l})) {
      MultiIndex ei(3, 0), ej(3, 0), el(3, 0);
      ei[i - 1] = 1;
      ej[j - 1] = 1;
      el[l - 1] = 1;
      PolyForm xip = wedge(scalar_monomial(3, ei), p);
      VectorField v = VectorField::zero(3);
      v.comp[l - 1] = wedge(xip, scalar_monomial(3, ej));
      v.comp[j - 1] = Rational(-1) * wedge(xip, scalar_monomial(3, el));
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::pair<FormSpace, FormSpace> build_AC_pair(int r) {
  if (r < 1) throw std::invalid_argument("build_AC_pair: need r >= 1");
  std::vector<VectorField> fields = vector_P(2, r);
  for (auto& v : x_homogeneous(2, r)) fields.push_back(std::move(v));
  // Supplemental fields: curls of x^{r-1}(1-x^2) y and x y^{r-1}(1-y^2).
  PolyForm w1 = scalar_monomial(2, {r - 1, 1}) - scalar_monomial(2, {r + 1, 1});
  PolyForm w2 = scalar_monomial(2, {1, r - 1}) - scalar_monomial(2, {1, r + 1});
  fields.push_back(curl2d(w1));
  fields.push_back(curl2d(w2));

  std::vector<PolyForm> one_forms;
  for (const auto& v : fields) one_forms.push_back(flat(rot2d(v), 1));
  FormSpace V = FormSpace::span(2, 1, one_forms);

  std::vector<PolyForm> two_forms;
  for (const auto& a : enumerate_multi_indices_up_to(2, r))
    two_forms.push_back(flat_scalar(scalar_monomial(2, a), 2));
  FormSpace W = FormSpace::span(2, 2, two_forms);
  return {V, W};
}

FormSpace build_CF_space(int n, int r, int k) {
  if (r < 1) throw std::invalid_argument("build_CF_space: need r >= 1");
  if (n == 2) {
    if (k == 0) {
      std::vector<PolyForm> gens;
      for (const auto& a : enumerate_multi_indices_up_to(2, r + 1))
        gens.push_back(scalar_monomial(2, a));
      gens.push_back(scalar_monomial(2, {1, r + 1}));
      gens.push_back(scalar_monomial(2, {r + 1, 1}));
      return FormSpace::span(2, 0, gens);
    }
    if (k == 1) {
      std::vector<PolyForm> gens;
      for (const auto& v : vector_P(2, r)) gens.push_back(flat(v, 1));
      for (const auto& v : x_homogeneous(2, r))
        gens.push_back(flat(rot2d(v), 1));
      gens.push_back(flat(grad(scalar_monomial(2, {1, r + 1})), 1));
      gens.push_back(flat(grad(scalar_monomial(2, {r + 1, 1})), 1));
      return FormSpace::span(2, 1, gens);
    }
    if (k == 2) {
      std::vector<PolyForm> gens;
      for (const auto& a : enumerate_multi_indices_up_to(2, r))
        gens.push_back(flat_scalar(scalar_monomial(2, a), 2));
      return FormSpace::span(2, 2, gens);
    }
  }
  if (n == 3) {
    if (k == 0) {
      std::vector<PolyForm> gens;
      for (const auto& a : enumerate_multi_indices_up_to(3, r + 1))
        gens.push_back(scalar_monomial(3, a));
      for (auto& m : delta_H3(r + 1)) gens.push_back(std::move(m));
      return FormSpace::span(3, 0, gens);
    }
    if (k == 1) {
      std::vector<PolyForm> gens;
      for (const auto& v : vector_P(3, r)) gens.push_back(flat(v, 1));
      VectorField x = position_field(3);
      for (const auto& a : enumerate_multi_indices(3, r))
        for (int i = 0; i < 3; ++i) {
          VectorField v = VectorField::zero(3);
          v.comp[i] = scalar_monomial(3, a);
          gens.push_back(flat(cross(x, v), 1));
        }
      for (const auto& m : delta_H3(r + 1)) gens.push_back(flat(grad(m), 1));
      for (const auto& v : delta_E3(r)) gens.push_back(flat(v, 1));
      return FormSpace::span(3, 1, gens);
    }
    if (k == 2) {
      std::vector<PolyForm> gens;
      for (const auto& v : vector_P(3, r)) gens.push_back(flat(v, 2));
      for (const auto& v : x_homogeneous(3, r)) gens.push_back(flat(v, 2));
      for (const auto& v : delta_E3(r)) gens.push_back(flat(curl3d(v), 2));
      return FormSpace::span(3, 2, gens);
    }
    if (k == 3) {
      std::vector<PolyForm> gens;
      for (const auto& a : enumerate_multi_indices_up_to(3, r))
        gens.push_back(flat_scalar(scalar_monomial(3, a), 3));
      return FormSpace::span(3, 3, gens);
    }
  }
  throw std::invalid_argument("build_CF_space: unsupported (n,k)");
}

PropertyReport check_prop_AC(int r) {
  auto [V, W] = build_AC_pair(r);
  FormSpace sm1 = space_Sminus(2, 1, r + 1);
  FormSpace sm2 = space_Sminus(2, 2, r + 1);
  std::string witness;
  if (!(V == sm1)) {
    std::ostringstream os;
    os << "velocity space dim " << V.dim() << " vs " << sm1.dim();
    witness = os.str();
  } else if (!(W == sm2)) {
    std::ostringstream os;
    os << "pressure space dim " << W.dim() << " vs " << sm2.dim();
    witness = os.str();
  }
  std::ostringstream detail;
  if (witness.empty())
    detail << "dims " << V.dim() << "," << W.dim();
  else
    detail << witness;
  return PropertyReport{"proxy_AC", 2, -1, r, witness.empty(), detail.str()};
}

PropertyReport check_prop_CF(int n, int r) {
  std::string witness;
  std::ostringstream dims;
  for (int k = 0; k <= n && witness.empty(); ++k) {
    FormSpace cf = build_CF_space(n, r, k);
    FormSpace sm = space_Sminus(n, k, r + 1);
    if (!(cf == sm)) {
      std::ostringstream os;
      os << "k=" << k << ": dim " << cf.dim() << " vs " << sm.dim();
      witness = os.str();
    } else {
      if (k > 0) dims << ",";
      dims << cf.dim();
    }
  }
  return PropertyReport{"proxy_CF", n, -1, r, witness.empty(),
                        witness.empty() ? "dims " + dims.str() : witness};
}

}  // namespace tsf
