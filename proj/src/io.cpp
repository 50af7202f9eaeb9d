#include "quadlie/io.hpp"

#include <fstream>
#include <sstream>

namespace quadlie::io {

namespace {

[[noreturn]] void fail(const std::string &what) { throw ParseError(what, 0, 0); }

const json &require(const json &j, const char *key) {
  if (!j.is_object())
    fail(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end())
    fail(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t index_from_json(const json &j, std::size_t bound, const char *what) {
  if (!j.is_number_integer())
    fail(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    fail(std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

std::size_t count_from_json(const json &j, const char *what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

} // namespace

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line,
                     col);
  }
}

json read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

json scalar_to_json(const Scalar &s) { return s.str(); }

Scalar scalar_from_json(const json &j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const std::exception &) {
      fail("bad rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  fail("scalars must be strings \"p/q\" or integers");
}

json vec_to_json(const Vec &v) {
  json out = json::array();
  for (const auto &s : v)
    out.push_back(scalar_to_json(s));
  return out;
}

Vec vec_from_json(const json &j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    fail("expected a vector of length " + std::to_string(expected));
  Vec v;
  for (const auto &e : j)
    v.push_back(scalar_from_json(e));
  return v;
}

json mat_to_json(const Mat &m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(vec_to_json(m.row_vec(r)));
  return out;
}

Mat mat_from_json(const json &j) {
  if (!j.is_array())
    fail("expected a matrix as a list of rows");
  if (j.empty())
    return Mat(0, 0);
  if (!j.front().is_array())
    fail("expected a matrix as a list of rows");
  const std::size_t cols = j.front().size();
  std::vector<Vec> rows;
  for (const auto &r : j)
    rows.push_back(vec_from_json(r, cols));
  return Mat::from_rows(rows, cols);
}

json algebra_to_json(const AlgebraData &a) {
  json out;
  out["dim"] = a.dim();
  json br = json::array();
  for (const auto &[key, v] : a.brackets())
    br.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"v", vec_to_json(v)}});
  out["brackets"] = br;
  return out;
}

json algebra_to_json(const QuadraticStructure &q) {
  json out = algebra_to_json(q.alg());
  out["form"] = mat_to_json(q.form());
  return out;
}

AlgebraData algebra_from_json(const json &j) {
  const std::size_t n = count_from_json(require(j, "dim"), "dim");
  AlgebraData a(n);
  const json &br = j.contains("brackets") ? j.at("brackets") : json::array();
  if (!br.is_array())
    fail("'brackets' must be a list");
  for (const auto &b : br) {
    const std::size_t i = index_from_json(require(b, "i"), n, "bracket index i");
    const std::size_t k = index_from_json(require(b, "j"), n, "bracket index j");
    const Vec v = vec_from_json(require(b, "v"), n);
    if (i == k && !is_zero(v))
      fail("bracket [e_" + std::to_string(i + 1) + ", e_" + std::to_string(i + 1) + "] must vanish");
    if (i != k && !is_zero(a.basis_bracket(i, k)))
      fail("bracket (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") given twice");
    a.set_bracket(i, k, v);
  }
  return a;
}

std::optional<Mat> form_from_json(const json &j) {
  if (!j.is_object() || !j.contains("form"))
    return std::nullopt;
  return mat_from_json(j.at("form"));
}

json coeffs_to_json(const AlternatingCoeffs &c) {
  json out;
  out["n"] = c.n();
  json terms = json::array();
  for (const auto &[t, v] : c.terms())
    terms.push_back({{"ijk", {t[0] + 1, t[1] + 1, t[2] + 1}}, {"c", scalar_to_json(v)}});
  out["terms"] = terms;
  return out;
}

AlternatingCoeffs coeffs_from_json(const json &j) {
  const std::size_t n = count_from_json(require(j, "n"), "n");
  AlternatingCoeffs c(n);
  const json &terms = j.contains("terms") ? j.at("terms") : json::array();
  if (!terms.is_array())
    fail("'terms' must be a list");
  for (const auto &t : terms) {
    const json &ijk = require(t, "ijk");
    if (!ijk.is_array() || ijk.size() != 3)
      fail("'ijk' must list three indices");
    const std::size_t i = index_from_json(ijk[0], n, "index");
    const std::size_t k1 = index_from_json(ijk[1], n, "index");
    const std::size_t k2 = index_from_json(ijk[2], n, "index");
    if (!(i < k1 && k1 < k2))
      fail("'ijk' indices must be strictly increasing");
    if (!c.get(i, k1, k2).is_zero())
      fail("term " + std::to_string(i + 1) + std::to_string(k1 + 1) + std::to_string(k2 + 1) + " given twice");
    c.set(i, k1, k2, scalar_from_json(require(t, "c")));
  }
  return c;
}

json cocycle_to_json(const GeneralCocycle &w) {
  json out;
  out["base"] = algebra_to_json(w.base());
  json vals = json::array();
  for (const auto &[key, v] : w.values())
    vals.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"v", vec_to_json(v)}});
  out["values"] = vals;
  return out;
}

GeneralCocycle cocycle_from_json(const json &j) {
  if (!j.is_object())
    fail("expected a cocycle object");
  if (!j.contains("base"))
    return GeneralCocycle::from_coeffs(CocycleCoeffs(coeffs_from_json(j)));
  const AlgebraData base = algebra_from_json(j.at("base"));
  const std::size_t n = base.dim();
  GeneralCocycle w(base);
  if (j.contains("terms")) {
    json flat = j;
    flat["n"] = n;
    const GeneralCocycle alt = GeneralCocycle::from_coeffs(CocycleCoeffs(coeffs_from_json(flat)));
    for (const auto &[key, v] : alt.values())
      w.set(key.first, key.second, v);
  }
  if (j.contains("values")) {
    for (const auto &e : j.at("values")) {
      const std::size_t a = index_from_json(require(e, "i"), n, "cocycle index i");
      const std::size_t b = index_from_json(require(e, "j"), n, "cocycle index j");
      const Vec v = vec_from_json(require(e, "v"), n);
      if (a == b && !is_zero(v))
        fail("w(e_i, e_i) must vanish");
      w.set(a, b, w.value(a, b) + v);
    }
  }
  return w;
}

json family_to_json(const QuadraticFamily &f) {
  json out;
  out["n"] = f.n;
  json mats = json::array();
  for (const auto &m : f.mats)
    mats.push_back(mat_to_json(m));
  out["mats"] = mats;
  return out;
}

QuadraticFamily family_from_json(const json &j) {
  QuadraticFamily f;
  f.n = count_from_json(require(j, "n"), "n");
  const json &mats = require(j, "mats");
  if (!mats.is_array() || mats.size() != f.n)
    fail("'mats' must hold n matrices");
  for (const auto &m : mats) {
    Mat x = mat_from_json(m);
    if (x.rows() != f.n || x.cols() != f.n)
      fail("each family matrix must be n x n");
    f.mats.push_back(std::move(x));
  }
  return f;
}

json chain_to_json(const ExtensionChain &ch) {
  json out;
  out["n"] = ch.n();
  json ds = json::array();
  for (const auto &d : ch.derivs())
    ds.push_back(mat_to_json(d));
  out["derivs"] = ds;
  return out;
}

ExtensionChain chain_from_json(const json &j) {
  const std::size_t n = count_from_json(require(j, "n"), "n");
  const json &ds = require(j, "derivs");
  if (!ds.is_array() || ds.size() != n)
    fail("'derivs' must hold n matrices");
  std::vector<Mat> derivs;
  for (std::size_t k = 0; k < n; ++k) {
    Mat d = mat_from_json(ds[k]);
    if (d.rows() != 2 * k || (k > 0 && d.cols() != 2 * k))
      fail("d_" + std::to_string(k) + " must be " + std::to_string(2 * k) + "x" + std::to_string(2 * k));
    derivs.push_back(k == 0 ? Mat(0, 0) : std::move(d));
  }
  return ExtensionChain(std::move(derivs));
}

} // namespace quadlie::io
