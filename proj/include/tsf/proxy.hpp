// Vector proxies in dimensions 2 and 3: the flat operator, 2-D rot/curl,
// 3-D grad/curl/cross, the Arbogast-Correa pair on the square and the
// Cockburn-Fu sequence on the square and cube, with span-equality checks
// against the trimmed serendipity spaces.

#ifndef TSF_PROXY_HPP
#define TSF_PROXY_HPP

#include "tsf/properties.hpp"

namespace tsf {

struct VectorField {
  int n = 0;
  std::vector<PolyForm> comp;  // n scalar (0-form) components on R^n

  static VectorField zero(int n);
};

// Scalar times dx_sigma (sigma strictly increasing).
PolyForm times_dx(const PolyForm& scalar, const IndexSet& sigma);

// v -> v_1 dx_1 + ... for k = 1; the n = 3, k = 2 recipe is
// v_1 dx_2 dx_3 - v_2 dx_1 dx_3 + v_3 dx_1 dx_2.  Supported (n,k):
// (2,1), (3,1), (3,2).  Throws on anything else.
PolyForm flat(const VectorField& v, int k);

// Scalars: k = 0 is the identity, k = n multiplies by the volume form.
PolyForm flat_scalar(const PolyForm& w, int k);

// Clockwise quarter turn (v_1, v_2) -> (v_2, -v_1).
VectorField rot2d(const VectorField& v);

// rot grad: w -> (dw/dx_2, -dw/dx_1).
VectorField curl2d(const PolyForm& w);

VectorField grad(const PolyForm& w);
VectorField curl3d(const VectorField& v);
VectorField cross(const VectorField& a, const VectorField& b);
PolyForm divergence(const VectorField& v);

// (rot V_AC^r)^flat as 1-forms and (W_AC^r)^flat as 2-forms, where
// V_AC^r = P_r^2 + x Ptilde_r + span{sigma_1, sigma_2} with
// sigma_i = curl of x^{r-1}(1-x^2)y and x y^{r-1}(1-y^2).
std::pair<FormSpace, FormSpace> build_AC_pair(int r);

// The k-th member of the Cockburn-Fu sequence on the n-cube (n = 2 or 3)
// at index r, already converted to k-forms via flat.
FormSpace build_CF_space(int n, int r, int k);

// Span equality with S_{r+1}^- Lambda^k at every position.
PropertyReport check_prop_AC(int r);
PropertyReport check_prop_CF(int n, int r);

}  // namespace tsf

#endif  // TSF_PROXY_HPP
