#pragma once

#include "quadlie/doubleext.hpp"
#include "quadlie/quadfam.hpp"
#include "quadlie/tstar.hpp"

#include <string>
#include <vector>

namespace quadlie {

/// c_ijk = M_i(k, j). Every redundant position must agree with the
/// alternating symmetry; otherwise throws std::invalid_argument.
CocycleCoeffs family_to_coeffs(const QuadraticFamily &f);
QuadraticFamily coeffs_to_family(const CocycleCoeffs &c);

/// d_{i-1}(b_j) = sum_{k<i} c_ijk b_k*. Requires n >= 3.
inline ExtensionChain coeffs_to_chain(const CocycleCoeffs &c) { return build_chain(c); }
/// c_ijk = D_ijk = f_n([b_i, b_j], b_k).
CocycleCoeffs chain_to_coeffs(const ExtensionChain &ch);

/// The coefficients of a 2-step algebra on e_1..e_n, e_1*..e_n* with
/// hyperbolic form: c_ijk = phi([e_i, e_j], e_k). Throws std::invalid_argument
/// when the algebra does not have that shape.
CocycleCoeffs algebra_to_coeffs(const QuadraticStructure &q);

struct RoadsReport {
  bool tstar_vs_chain = false;
  bool tstar_vs_family = false;
  bool chain_vs_family = false;
  /// Folding double_extend_1d over the chain agrees with the closed formula.
  bool chain_fold = false;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Builds the algebra by the T*, chain and family routes and compares
/// structure constants and forms for identity. Requires c != 0 and n >= 3.
RoadsReport all_roads(const CocycleCoeffs &c, bool include_fold = true);

/// C(n, 3), the number of free coefficients at base dimension n.
std::size_t parameter_count(std::size_t n);

} // namespace quadlie
