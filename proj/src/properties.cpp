#include "tsf/properties.hpp"

#include <sstream>

namespace tsf {

namespace {

const FormOp kD = [](const PolyForm& f) { return exterior_derivative(f); };
const FormOp kKappa = [](const PolyForm& f) { return koszul(f); };

PropertyReport make_report(std::string property, int n, int k, int r,
                           bool pass, std::string detail) {
  return PropertyReport{std::move(property), n, k, r, pass, std::move(detail)};
}

// First basis element of a not contained in b, rendered as a witness.
std::string containment_witness(const FormSpace& a, const FormSpace& b) {
  for (const auto& f : a.basis())
    if (!b.contains(f)) return "not contained: " + to_string(f);
  return "";
}

}  // namespace

std::string family_name(ComplexFamily family) {
  switch (family) {
    case ComplexFamily::Sminus: return "Sminus";
    case ComplexFamily::SDescending: return "S_descending";
    case ComplexFamily::PDescending: return "P_descending";
    case ComplexFamily::Pminus: return "Pminus";
  }
  return "?";
}

PropertyReport check_inclusion(int n, int k, int r) {
  FormSpace s_r = space_S(n, k, r);
  FormSpace sm = space_Sminus(n, k, r + 1);
  FormSpace s_r1 = space_S(n, k, r + 1);
  std::string witness;
  if (!subspace(s_r, sm))
    witness = "S_r not in S_{r+1}^-: " + containment_witness(s_r, sm);
  else if (!subspace(sm, s_r1))
    witness = "S_{r+1}^- not in S_{r+1}: " + containment_witness(sm, s_r1);
  else if (k > 0 && !(dim_Sminus(n, k, r + 1) < dim_S(n, k, r + 1)))
    witness = "trimmed space not strictly smaller";
  std::ostringstream detail;
  if (witness.empty())
    detail << "dims " << s_r.dim() << " <= " << sm.dim() << " <= "
           << s_r1.dim();
  else
    detail << witness;
  return make_report("inclusion", n, k, r, witness.empty(), detail.str());
}

PropertyReport check_subcomplex(int n, int k, int r) {
  FormSpace sm = space_Sminus(n, k, r);
  FormSpace d_image = image(sm, kD, n, k + 1);
  std::string witness;
  if (k < n) {
    FormSpace target = space_Sminus(n, k + 1, r);
    FormSpace sharper = space_S(n, k + 1, r - 1);
    if (!subspace(d_image, target))
      witness = "dS_r^- not in S_r^-: " + containment_witness(d_image, target);
    else if (!subspace(d_image, sharper))
      witness = "dS_r^- not in S_{r-1}: " + containment_witness(d_image, sharper);
  } else if (d_image.dim() != 0) {
    witness = "d of an n-form is nonzero";
  }
  std::ostringstream detail;
  if (witness.empty())
    detail << "dim dS = " << d_image.dim();
  else
    detail << witness;
  return make_report("subcomplex", n, k, r, witness.empty(), detail.str());
}

PropertyReport check_exactness(int n, int r, ComplexFamily family) {
  auto member = [&](int k) -> FormSpace {
    switch (family) {
      case ComplexFamily::Sminus: return space_Sminus(n, k, r);
      case ComplexFamily::SDescending: return space_S(n, k, r - k);
      case ComplexFamily::PDescending: return space_P(n, k, r - k);
      case ComplexFamily::Pminus: return space_Pminus(n, k, r);
    }
    return FormSpace(n, k);
  };
  std::ostringstream ledger;
  bool pass = true;
  std::string witness;
  int prev_image_dim = 0;  // dim of im(d) arriving from position k-1
  for (int k = 0; k <= n; ++k) {
    FormSpace x = member(k);
    int ker_dim = kernel(x, kD, n, k + 1).dim();
    int expected = prev_image_dim + (k == 0 ? 1 : 0);
    if (ker_dim != expected) {
      pass = false;
      std::ostringstream os;
      os << "at k=" << k << ": dim ker d = " << ker_dim << ", expected "
         << expected;
      witness = os.str();
      break;
    }
    prev_image_dim = x.dim() - ker_dim;
    if (k > 0) ledger << ",";
    ledger << x.dim();
  }
  return make_report("exactness_" + family_name(family), n, -1, r, pass,
                     pass ? "dims " + ledger.str() : witness);
}

PropertyReport check_trace(int n, int k, int r) {
  if (n < 2)
    return make_report("trace", n, k, r, true, "vacuous (n < 2)");
  std::string witness;
  if (k <= n - 1) {
    FormSpace sm = space_Sminus(n, k, r);
    FormSpace facet_space = space_Sminus(n - 1, k, r);
    for (int axis = 1; axis <= n && witness.empty(); ++axis) {
      for (int sign = -1; sign <= 1 && witness.empty(); sign += 2) {
        FormOp tr = [axis, sign](const PolyForm& f) {
          return trace(f, axis, Rational(sign));
        };
        FormSpace traced = image(sm, tr, n - 1, k);
        if (!subspace(traced, facet_space)) {
          std::ostringstream os;
          os << "facet x" << axis << "=" << sign << ": "
             << containment_witness(traced, facet_space);
          witness = os.str();
        }
      }
    }
  } else {
    // k = n: every term's dx factors meet the pinned axis, traces vanish.
    FormSpace sm = space_Sminus(n, k, r);
    for (const auto& f : sm.basis())
      if (!trace(f, 1, Rational(1)).is_zero()) witness = "n-form trace nonzero";
  }
  return make_report("trace", n, k, r, witness.empty(),
                     witness.empty() ? "all 2n facets" : witness);
}

PropertyReport check_decompositions(int n, int k, int r) {
  FormSpace pm = space_Pminus(n, k, r);
  FormSpace j = space_J(n, k, r);
  FormSpace dj = image(space_J(n, k - 1, r), kD, n, k);
  FormSpace sm = space_Sminus(n, k, r);
  FormSpace assembled = sum(sum(pm, j), dj);
  std::string witness;
  if (assembled.dim() != pm.dim() + j.dim() + dj.dim())
    witness = "S_r^- decomposition not direct";
  else if (!(assembled == sm))
    witness = "S_r^- != P_r^- + J_r + dJ_r";

  // Serendipity decomposition S_r = P_r + J_r + dJ_{r+1}, also direct.
  if (witness.empty()) {
    FormSpace p = space_P(n, k, r);
    FormSpace dj_next = image(space_J(n, k - 1, r + 1), kD, n, k);
    FormSpace s_assembled = sum(sum(p, j), dj_next);
    if (s_assembled.dim() != p.dim() + j.dim() + dj_next.dim())
      witness = "S_r decomposition not direct";
    else if (!(s_assembled == space_S(n, k, r)))
      witness = "S_r != P_r + J_r + dJ_{r+1}";
  }

  // Lemma identities.
  if (witness.empty()) {
    if (k == 0 && !(sm == space_S(n, 0, r)))
      witness = "S_r^-L0 != S_rL0";
    if (k == n && !(sm == space_S(n, n, r - 1)))
      witness = "S_r^-Ln != S_{r-1}Ln";
    if (k >= 1) {
      FormSpace ds_next = image(space_S(n, k - 1, r + 1), kD, n, k);
      if (!(sum(sm, ds_next) == space_S(n, k, r)))
        witness = "S_r^- + dS_{r+1} != S_r";
    }
  }
  std::ostringstream detail;
  if (witness.empty())
    detail << pm.dim() << "+" << j.dim() << "+" << dj.dim() << "="
           << sm.dim();
  else
    detail << witness;
  return make_report("decomposition", n, k, r, witness.empty(), detail.str());
}

PropertyReport check_J_identities(int n, int k, int r) {
  FormSpace j = space_J(n, k, r);
  std::string witness;
  if (!(j == space_J_char(n, k, r)))
    witness = "definition and kappa-m characterization differ";
  if (witness.empty()) {
    FormSpace pj_next = sum(space_P(n, k, r + 1), space_J(n, k, r + 1));
    if (!subspace(j, pj_next)) witness = "J_r not in P_{r+1} + J_{r+1}";
  }
  if (witness.empty()) {
    FormSpace kp = image(space_P(n, k + 1, r), kKappa, n, k);
    FormSpace sharp = sum(kp, space_J(n, k, r + 1));
    if (!subspace(j, sharp)) witness = "J_r not in kappa P_r + J_{r+1}";
  }
  if (witness.empty()) {
    FormSpace kdj = image(image(j, kD, n, k + 1), kKappa, n, k);
    if (!(kdj == j)) witness = "kappa d J_r != J_r";
  }
  if (witness.empty()) {
    FormSpace dkj = image(image(j, kKappa, n, k - 1), kD, n, k);
    if (dkj.dim() != 0) witness = "d kappa J_r != 0";
  }
  std::ostringstream detail;
  if (witness.empty())
    detail << "dim J = " << j.dim();
  else
    detail << witness;
  return make_report("J_identities", n, k, r, witness.empty(), detail.str());
}

PropertyReport check_unisolvence(int n, int k, int r) {
  UnisolvenceReport rep = unisolvence_check(n, k, r);
  std::ostringstream detail;
  detail << rep.rows << "x" << rep.cols << " rank " << rep.rank;
  if (!rep.unisolvent) detail << " kernel " << rep.kernel_dim;
  return make_report("unisolvence", n, k, r, rep.unisolvent, detail.str());
}

PropertyReport check_minimality(int n, int k, int r) {
  bool ok = minimality_identity(n, k, r);
  std::ostringstream detail;
  detail << "interior count " << interior_dof_count(n, k, r).get_str();
  return make_report("minimality", n, k, r, ok, detail.str());
}

}  // namespace tsf
