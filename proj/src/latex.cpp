#include "quadlie/latex.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace quadlie {

namespace {

std::string basis_name(std::size_t dim, std::size_t i) {
  if (dim % 2 == 0 && i >= dim / 2)
    return "e^*_" + std::to_string(i - dim / 2 + 1);
  return "e_" + std::to_string(i + 1);
}

std::string magnitude(const Scalar &s) {
  if (s == Scalar(1))
    return "";
  if (s.is_integer())
    return s.str();
  return "\\frac{" + s.numerator().get_str() + "}{" + s.denominator().get_str() + "}";
}

} // namespace

std::string latex_combination(const Vec &v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero())
      continue;
    const bool neg = v[i].sign() < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    os << magnitude(neg ? -v[i] : v[i]) << basis_name(v.size(), i);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string latex_table(const AlgebraData &a) {
  const std::size_t dim = a.dim();
  std::vector<std::string> cells;
  for (const auto &[key, v] : a.brackets()) {
    // "[e_1,e_2] & = e^*_3" in the list order of the stored constants.
    cells.push_back("[" + basis_name(dim, key.first) + "," + basis_name(dim, key.second) + "] & = " +
                    latex_combination(v));
  }
  if (cells.empty())
    return "% abelian: no nonzero products\n";
  const std::size_t cols = cells.size() <= 9 ? 3 : 4;
  std::ostringstream os;
  os << "\\begin{alignat*}{" << cols << "}\n";
  for (std::size_t start = 0; start < cells.size(); start += cols) {
    os << "\t";
    const std::size_t end = std::min(cells.size(), start + cols);
    for (std::size_t c = start; c < end; ++c) {
      os << cells[c];
      if (c + 1 == cells.size())
        os << ".";
      else if (c + 1 == end)
        os << ", \\\\";
      else
        os << ",\\qquad & ";
    }
    os << "\n";
  }
  os << "\\end{alignat*}\n";
  return os.str();
}

} // namespace quadlie
