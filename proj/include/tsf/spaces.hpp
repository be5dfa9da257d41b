// Constructors for every space family used by the trimmed serendipity
// construction -- H, H_{r,l}, P, P-, J, S, S- and operator images of them --
// together with their closed-form dimension formulas.

#ifndef TSF_SPACES_HPP
#define TSF_SPACES_HPP

#include <memory>
#include <string>

#include "tsf/linalg.hpp"

namespace tsf {

enum class SpaceTag {
  H,             // homogeneous degree-r k-forms
  HLinear,       // subset of H with linear degree >= ell
  P,             // polynomial k-forms of degree <= r
  Pminus,        // trimmed polynomial forms
  J,             // sum_{l>=1} kappa H_{r+l-1,l} Lambda^{k+1}
  JViaChar,      // same space via the span-of-kappa-m characterization
  S,             // serendipity forms
  Sminus,        // trimmed serendipity forms
  DOf,           // d applied to an inner space
  KappaOf,       // kappa applied to an inner space
  QminusDimOnly  // tensor-product Q_r^- (dimension only, no basis route)
};

struct SpaceKind {
  SpaceTag tag;
  int ell = 0;                      // HLinear only
  std::shared_ptr<SpaceKind> inner; // DOf / KappaOf only

  static SpaceKind simple(SpaceTag t) { return {t, 0, nullptr}; }
  static SpaceKind h_linear(int ell) { return {SpaceTag::HLinear, ell, nullptr}; }
  static SpaceKind d_of(SpaceKind k) {
    return {SpaceTag::DOf, 0, std::make_shared<SpaceKind>(std::move(k))};
  }
  static SpaceKind kappa_of(SpaceKind k) {
    return {SpaceTag::KappaOf, 0, std::make_shared<SpaceKind>(std::move(k))};
  }
};

// Echelonized basis of the requested space.  Throws std::invalid_argument
// for k outside [0,n] and for QminusDimOnly (no basis route).
FormSpace generate_space(const SpaceKind& kind, int n, int k, int r);

// Exact dimension by closed formula (no basis construction).
Integer dim_formula(const SpaceKind& kind, int n, int k, int r);

// Piecewise closed forms for n = 2, 3 from the dimension-equality proofs.
Integer appendix_b_dim(int n, int k, int r);

// Named constructors (internal helpers, exported for tests and reuse).
// All tolerate k outside [0,n] and degenerate degrees by returning the zero
// space.
FormSpace space_H(int n, int k, int r);
FormSpace space_H_linear(int n, int k, int r, int ell);
FormSpace space_P(int n, int k, int r);
FormSpace space_Pminus(int n, int k, int r);
FormSpace space_J(int n, int k, int r);
FormSpace space_J_char(int n, int k, int r);
FormSpace space_S(int n, int k, int r);
FormSpace space_Sminus(int n, int k, int r);          // definition route
FormSpace space_Sminus_decomp(int n, int k, int r);   // P- + J + dJ route

// Dimension helpers.
Integer dim_H(int n, int k, int r);
Integer dim_P(int n, int k, int r);
Integer dim_Pminus(int n, int k, int r);
Integer dim_kappaH(int n, int k, int r);  // |kappa H_r Lambda^k| = |d H_{r+1} Lambda^{k-1}|
Integer dim_dH(int n, int k, int r);      // |d H_r Lambda^k|
Integer dim_J(int n, int k, int r);       // j_{r,k}
Integer dim_S(int n, int k, int r);
Integer dim_Sminus(int n, int k, int r);
Integer dim_Qminus(int n, int k, int r);

// Parse a CLI space name ("H","P","Pminus","J","S","Sminus","Qminus").
// Throws std::invalid_argument on unknown names.
SpaceKind parse_space_kind(const std::string& name);

}  // namespace tsf

#endif  // TSF_SPACES_HPP
