#pragma once

#include "quadlie/quadform.hpp"

#include <string>
#include <vector>

namespace quadlie {

/// n skew n x n matrices M_1..M_n. m_ijk is entry (k, j) of M_i.
struct QuadraticFamily {
  std::size_t n = 0;
  std::vector<Mat> mats;

  friend bool operator==(const QuadraticFamily &, const QuadraticFamily &) = default;
};

struct FamilyViolation {
  int law; ///< 0 for a shape problem, otherwise 1, 2 or 3
  std::size_t i;
  std::size_t j;
  std::string message;
};

/// Every broken law: (1) M_i skew, (2) column i of M_i zero,
/// (3) column j of M_i equals minus column i of M_j for j > i.
std::vector<FamilyViolation> validate_family(const QuadraticFamily &f);
bool is_valid_family(const QuadraticFamily &f);

/// The n x n(n-1)/2 matrix [M_{1<j} M_{2<j} ... M_{n-1<j}]. Throws
/// std::invalid_argument for an invalid family.
Mat f_matrix(const QuadraticFamily &f);
bool is_nondegenerate_family(const QuadraticFamily &f);

/// [e_i, e_j] = sum_k M_i(k, j) e_{n+k} with phi(e_i, e_{n+j}) = delta_ij.
/// Throws ValidationError for an invalid or zero family.
QuadraticStructure algebra_from_family(const QuadraticFamily &f);

} // namespace quadlie
