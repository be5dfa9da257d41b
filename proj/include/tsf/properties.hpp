// Theorem-level claims as executable span computations.  Every check
// returns a PropertyReport; failures carry a witness description.

#ifndef TSF_PROPERTIES_HPP
#define TSF_PROPERTIES_HPP

#include <string>

#include "tsf/dof.hpp"
#include "tsf/spaces.hpp"

namespace tsf {

struct PropertyReport {
  std::string property;
  int n = 0;
  int k = -1;  // -1 when the check spans all form orders
  int r = 0;
  bool pass = false;
  std::string detail;  // witness on failure, rank/dim ledger on success
};

// S_r Lambda^k subset S_{r+1}^- Lambda^k subset S_{r+1} Lambda^k, plus
// strictness dim S_r^- < dim S_r for 0 < k <= n.
PropertyReport check_inclusion(int n, int k, int r);

// d S_r^- Lambda^k subset S_r^- Lambda^{k+1}, and the sharper containment
// d S_r^- Lambda^k subset S_{r-1} Lambda^{k+1}.
PropertyReport check_subcomplex(int n, int k, int r);

enum class ComplexFamily { Sminus, SDescending, PDescending, Pminus };

// Rank accounting for the augmented complex 0 -> R -> X^0 -> ... -> X^n -> 0.
PropertyReport check_exactness(int n, int r, ComplexFamily family);

// tr_f S_r^- Lambda^k(R^n) subset S_r^- Lambda^k(f) on all 2n facets.
PropertyReport check_trace(int n, int k, int r);

// S_r^- = P_r^- + J_r + dJ_r (direct, route equality), S_r = P_r + J_r +
// dJ_{r+1} (direct), and the lemma identities S_r^-L0 = S_rL0,
// S_r^-Ln = S_{r-1}Ln, S_r^-Lk + dS_{r+1}Lk-1 = S_rLk.
PropertyReport check_decompositions(int n, int k, int r);

// J_r subset P_{r+1} + J_{r+1}; J_r subset kappa P_r Lambda^{k+1} + J_{r+1};
// kappa d J_r = J_r; d kappa J_r = 0; J_r = span-of-kappa-m characterization.
PropertyReport check_J_identities(int n, int k, int r);

// Wraps unisolvence_check / minimality_identity as reports.
PropertyReport check_unisolvence(int n, int k, int r);
PropertyReport check_minimality(int n, int k, int r);

std::string family_name(ComplexFamily family);

}  // namespace tsf

#endif  // TSF_PROPERTIES_HPP
