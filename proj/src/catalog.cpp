#include "quadlie/catalog.hpp"

#include "quadlie/trivector.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quadlie {

Trivector CatalogEntry::coeffs() const { return parse_trivector(trivector, n); }

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const std::vector<std::pair<std::string, std::string>> raw = {
        {"L3,1", "123"},
        {"L5,1", "123+145"},
        {"L6,1", "123+456"},
        {"L6,2", "124+135+236"},
        {"L7,1", "123+145+167"},
        {"L7,2", "127+134+256"},
        {"L7,3", "125+136+147+234"},
        {"L7,4", "125+137+247+346"},
        {"L7,5", "123+147+257+367+456"},
        {"L8,1", "156+178+234"},
        {"L8,2", "127+138+145+236"},
        {"L8,3", "125+137+248+346"},
        {"L8,4", "137+168+236+245"},
        {"L8,5", "134+178+256+278"},
        {"L8,6", "128+135+147+237+246"},
        {"L8,7", "127+138+156+246+345"},
        {"L8,8", "136+158+247+258+345"},
        {"L8,9", "145+167+238+246+357"},
        {"L8,10", "128+167+236+247+345"},
        {"L8,11", "128+136+157+247+256+345"},
        {"L8,12", "126+158+238+257+347+456"},
        {"L8,13", "123+178+257+368+456+478"},
    };
    std::vector<CatalogEntry> out;
    for (const auto &[label, tri] : raw) {
      const std::size_t n = static_cast<std::size_t>(label[1] - '0');
      out.push_back({label, tri, n, 2 * n});
    }
    return out;
  }();
  return entries;
}

const CatalogEntry &catalog_entry(std::string_view label) {
  std::string key;
  for (char ch : label)
    if (std::isdigit(static_cast<unsigned char>(ch)))
      key.push_back(ch);
    else if (ch == ',' || ch == '.')
      key.push_back(',');
  for (const auto &e : catalog())
    if (e.label.substr(1) == key)
      return e;
  throw std::out_of_range("unknown catalog label '" + std::string(label) + "'");
}

std::map<std::size_t, std::size_t> catalog_counts() {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t dim = 6; dim <= 16; dim += 2)
    counts[dim] = 0;
  for (const auto &e : catalog())
    ++counts[e.expected_dim];
  return counts;
}

Trivector example_18(const Scalar &lambda) {
  Trivector t(9);
  t.set(0, 1, 2, lambda);
  t.set(3, 4, 5, lambda);
  t.set(6, 7, 8, lambda);
  t.add(0, 3, 6, 1);
  t.add(0, 4, 7, 1);
  return t;
}

} // namespace quadlie
