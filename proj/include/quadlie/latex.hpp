#pragma once

#include "quadlie/quadform.hpp"

#include <string>

namespace quadlie {

/// Nonzero products [x_i, x_j], i < j, as an alignat* block. Even-dimensional
/// algebras name their basis e_1..e_n, e^*_1..e^*_n; odd ones use e_1..e_dim.
/// Three columns for up to nine products, four beyond that.
std::string latex_table(const AlgebraData &a);

/// Linear combination of basis names, e.g. "e^*_1 + e^*_2" or "-\frac{1}{2}e^*_3".
std::string latex_combination(const Vec &v);

} // namespace quadlie
