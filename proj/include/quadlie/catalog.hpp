#pragma once

#include "quadlie/coeffs.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace quadlie {

/// A reduced quadratic 2-step algebra of dimension 2n, named L_{n,k}, given
/// by its trivector.
struct CatalogEntry {
  std::string label;      ///< "L3,1", "L8,13", ...
  std::string trivector;  ///< compact notation, e.g. "124+135+236"
  std::size_t n;
  std::size_t expected_dim;

  Trivector coeffs() const;
};

/// All 22 entries in list order.
const std::vector<CatalogEntry> &catalog();
/// Accepts "L8,5", "L_{8,5}", "8,5" or "8.5". Throws std::out_of_range for an unknown label.
const CatalogEntry &catalog_entry(std::string_view label);
/// Algebra dimension -> number of entries, including the empty dimension 8.
std::map<std::size_t, std::size_t> catalog_counts();

/// lambda (123 + 456 + 789) + 147 + 158 on nine indices.
Trivector example_18(const Scalar &lambda);

} // namespace quadlie
