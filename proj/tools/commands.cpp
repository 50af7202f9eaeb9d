#include "commands.hpp"

#include "quadlie/catalog.hpp"
#include "quadlie/convert.hpp"
#include "quadlie/io.hpp"
#include "quadlie/latex.hpp"
#include "quadlie/random.hpp"
#include "quadlie/trivector.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace quadlie::cli {

namespace {

using io::json;

constexpr std::size_t kMaxWitnesses = 10;

/// A usage or input problem; reported as {"error": ...} with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json payload;     ///< printed for --format json
  std::string text; ///< printed for latex / summary
  bool ok = true;
};

json triple_json(const std::array<std::size_t, 3> &t) { return json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Every structural check on an algebra and an optional form.
json verify_report(const AlgebraData &alg, const std::optional<Mat> &form, bool &ok) {
  json r;
  r["dim"] = alg.dim();
  const auto jd = jacobi_defect(alg);
  r["lie"] = jd.empty();
  json defects = json::array();
  for (std::size_t i = 0; i < jd.size() && i < kMaxWitnesses; ++i)
    defects.push_back(triple_json(jd[i].triple));
  r["jacobi_defects"] = defects;
  ok = jd.empty();
  if (jd.empty()) {
    const auto ni = nilindex(alg);
    r["nilindex"] = ni ? json(*ni) : json(nullptr);
    const AlgebraType t = algebra_type(alg);
    r["type"] = json::array({t.derived_dim, t.centre_dim});
    r["reduced"] = is_reduced(alg);
  }
  if (form) {
    const bool sized = form->rows() == alg.dim() && form->cols() == alg.dim();
    const bool symmetric = sized && form->is_symmetric();
    r["symmetric"] = symmetric;
    const bool nondeg = sized && rank(*form) == alg.dim();
    r["nondegenerate"] = nondeg;
    bool invariant = false;
    json inv = json::array();
    if (symmetric) {
      const auto d = invariance_defect(alg, *form);
      invariant = d.empty();
      for (std::size_t i = 0; i < d.size() && i < kMaxWitnesses; ++i)
        inv.push_back(triple_json(d[i]));
    }
    r["invariant"] = invariant;
    r["invariance_defects"] = inv;
    bool orth = false;
    if (symmetric && nondeg)
      orth = orthogonal_complement(*form, derived_algebra(alg)) == centre(alg);
    r["orthogonality"] = orth;
    ok = ok && symmetric && nondeg && invariant && orth;
  }
  r["ok"] = ok;
  return r;
}

std::string summary_of(const json &j, const std::string &indent = "") {
  std::ostringstream os;
  for (const auto &[key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n" << summary_of(value, indent + "  ");
      continue;
    }
    os << indent << key << ": ";
    if (value.is_boolean())
      os << yes_no(value.get<bool>());
    else if (value.is_null())
      os << "none";
    else if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
  return os.str();
}

bool is_file(const std::string &s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

Trivector load_trivector(const std::string &input, std::size_t n) {
  if (is_file(input)) {
    const json j = io::read_file(input);
    if (j.is_string())
      return parse_trivector(j.get<std::string>(), n);
    return Trivector(io::coeffs_from_json(j));
  }
  try {
    return parse_trivector(input, n);
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string(e.what()));
  }
}

QuadraticStructure load_quadratic(const std::string &path) {
  const json j = io::read_file(path);
  const AlgebraData alg = io::algebra_from_json(j);
  const auto form = io::form_from_json(j);
  if (!form)
    throw InputError("'" + path + "' has no \"form\"");
  return QuadraticStructure(alg, *form);
}

Outcome algebra_outcome(const QuadraticStructure &q, Format fmt, json extra = json::object()) {
  Outcome o;
  bool ok = true;
  const json report = verify_report(q.alg(), q.form(), ok);
  o.payload = extra;
  o.payload["algebra"] = io::algebra_to_json(q);
  o.payload["report"] = report;
  o.ok = ok;
  if (fmt == Format::Latex)
    o.text = latex_table(q.alg());
  else
    o.text = summary_of(extra) + summary_of(report);
  return o;
}

Outcome cmd_verify(const std::string &path, Format fmt) {
  const json j = io::read_file(path);
  const AlgebraData alg = io::algebra_from_json(j);
  const auto form = io::form_from_json(j);
  Outcome o;
  bool ok = true;
  o.payload = verify_report(alg, form, ok);
  o.ok = ok;
  o.text = fmt == Format::Latex ? latex_table(alg) : summary_of(o.payload);
  return o;
}

Outcome catalog_one(const CatalogEntry &e, Format fmt) {
  json extra;
  extra["label"] = e.label;
  extra["trivector"] = e.trivector;
  extra["dim"] = e.expected_dim;
  return algebra_outcome(algebra_from_trivector(e.coeffs()), fmt, extra);
}

Outcome cmd_catalog(const std::string &label, bool counts, bool all, Format fmt) {
  Outcome o;
  if (counts) {
    json c = json::object();
    std::string dims = "dimension:", nums = "number:   ";
    std::size_t total = 0;
    for (const auto &[dim, k] : catalog_counts()) {
      c[std::to_string(dim)] = k;
      dims += " " + std::to_string(dim);
      nums += " " + std::to_string(k);
      total += k;
    }
    o.payload["counts"] = c;
    o.payload["total"] = total;
    o.text = dims + "\n" + nums + "\ntotal: " + std::to_string(total) + "\n";
    return o;
  }
  if (all) {
    json entries = json::array();
    std::ostringstream text;
    std::size_t passed = 0;
    for (const auto &e : catalog()) {
      const Outcome one = catalog_one(e, Format::Json);
      const json &r = one.payload["report"];
      const bool pass = one.ok && r["nilindex"] == 2 && r["reduced"] == true &&
                        r["type"] == json::array({e.n, e.n});
      passed += pass ? 1 : 0;
      entries.push_back({{"label", e.label}, {"trivector", e.trivector}, {"pass", pass}});
      text << (pass ? "pass " : "FAIL ") << e.label << " " << e.trivector << "\n";
    }
    o.payload["entries"] = entries;
    o.payload["passed"] = passed;
    o.payload["total"] = catalog().size();
    o.ok = passed == catalog().size();
    text << passed << "/" << catalog().size() << " passed\n";
    o.text = text.str();
    return o;
  }
  if (label.empty())
    throw InputError("catalog needs a label, --counts or --all");
  try {
    return catalog_one(catalog_entry(label), fmt);
  } catch (const std::out_of_range &e) {
    throw InputError(e.what());
  }
}

enum class Kind { Trivector, Cocycle, Family, Chain, Algebra };

Kind kind_from(const std::string &s) {
  if (s == "trivector")
    return Kind::Trivector;
  if (s == "cocycle")
    return Kind::Cocycle;
  if (s == "family")
    return Kind::Family;
  if (s == "chain")
    return Kind::Chain;
  if (s == "algebra")
    return Kind::Algebra;
  throw InputError("unknown representation '" + s + "'");
}

Outcome cmd_convert(const std::string &from, const std::string &to, const std::string &input, std::size_t n,
                    Format fmt) {
  CocycleCoeffs c;
  switch (kind_from(from)) {
  case Kind::Trivector:
    c = delta_inv(load_trivector(input, n));
    break;
  case Kind::Cocycle:
    c = CocycleCoeffs(io::coeffs_from_json(io::read_file(input)));
    break;
  case Kind::Family:
    c = family_to_coeffs(io::family_from_json(io::read_file(input)));
    break;
  case Kind::Chain:
    c = chain_to_coeffs(io::chain_from_json(io::read_file(input)));
    break;
  case Kind::Algebra:
    c = algebra_to_coeffs(load_quadratic(input));
    break;
  }
  Outcome o;
  switch (kind_from(to)) {
  case Kind::Trivector:
    o.payload = io::coeffs_to_json(delta(c));
    o.payload["text"] = format_trivector(delta(c));
    o.text = format_trivector(delta(c)) + "\n";
    break;
  case Kind::Cocycle:
    o.payload = io::coeffs_to_json(c);
    o.text = summary_of(o.payload);
    break;
  case Kind::Family:
    o.payload = io::family_to_json(coeffs_to_family(c));
    o.text = summary_of(o.payload);
    break;
  case Kind::Chain:
    o.payload = io::chain_to_json(coeffs_to_chain(c));
    o.text = summary_of(o.payload);
    break;
  case Kind::Algebra:
    return algebra_outcome(tstar_extend(c), fmt);
  }
  if (fmt == Format::Latex && kind_from(to) != Kind::Trivector && c.n() >= 3 && !c.is_zero())
    o.text = latex_table(tstar_extend(c).alg());
  return o;
}

Outcome cmd_extend(const std::string &chain_path, const std::string &alg_path, const std::string &der_path,
                   Format fmt) {
  if (!chain_path.empty()) {
    const ExtensionChain ch = io::chain_from_json(io::read_file(chain_path));
    json extra;
    extra["nnp"] = ch.nnp();
    extra["two_step_property"] = ch.two_step_property();
    const QuadraticStructure folded = chain_algebras(ch).back();
    bool closed_ok = false;
    if (ch.nnp() && ch.two_step_property()) {
      closed_ok = chain_to_algebra(ch) == folded;
      extra["closed_formula_agrees"] = closed_ok;
      extra["reduced_by_chain"] = chain_reduced_check(ch);
    }
    Outcome o = algebra_outcome(folded, fmt, extra);
    if (ch.nnp() && ch.two_step_property())
      o.ok = o.ok && closed_ok;
    return o;
  }
  if (alg_path.empty() || der_path.empty())
    throw InputError("extend needs --chain, or --algebra with --derivation");
  const QuadraticStructure aq = load_quadratic(alg_path);
  const json dj = io::read_file(der_path);
  const Mat d = io::mat_from_json(dj.is_object() ? dj.at("d") : dj);
  const SkewDerivation sd(aq, d);
  const QuadraticStructure ext = double_extend_1d(aq, sd);
  json extra;
  extra["inner"] = inner_element(aq.alg(), d).has_value();
  extra["two_step_criterion"] = two_step_criterion(aq, sd);
  const bool centre_ok = centre_formula_1d(aq, sd) == centre(ext.alg());
  extra["centre_formula_agrees"] = centre_ok;
  Outcome o = algebra_outcome(ext, fmt, extra);
  o.ok = o.ok && centre_ok;
  return o;
}

Outcome cmd_tstar(const std::string &input, std::size_t n, Format fmt) {
  GeneralCocycle w;
  if (is_file(input)) {
    const json j = io::read_file(input);
    w = j.is_string() ? GeneralCocycle::from_coeffs(delta_inv(parse_trivector(j.get<std::string>(), n)))
                      : io::cocycle_from_json(j);
  } else {
    w = GeneralCocycle::from_coeffs(delta_inv(load_trivector(input, n)));
  }
  json extra;
  extra["cyclic"] = is_cyclic(w);
  extra["two_cocycle"] = is_two_cocycle(w);
  extra["radical_dim"] = radical(w).dim();
  return algebra_outcome(tstar_extend(w), fmt, extra);
}

Outcome cmd_family(const std::string &path, bool to_algebra, Format fmt) {
  const QuadraticFamily f = io::family_from_json(io::read_file(path));
  const auto violations = validate_family(f);
  json extra;
  extra["valid"] = violations.empty();
  json vs = json::array();
  for (const auto &v : violations)
    vs.push_back({{"law", v.law}, {"message", v.message}});
  extra["violations"] = vs;
  if (violations.empty()) {
    extra["f_rank"] = rank(f_matrix(f));
    extra["nondegenerate"] = is_nondegenerate_family(f);
  }
  if (to_algebra && violations.empty())
    return algebra_outcome(algebra_from_family(f), fmt, extra);
  Outcome o;
  o.payload = extra;
  o.ok = violations.empty();
  o.text = summary_of(extra);
  return o;
}

Outcome cmd_rank(const std::string &input, std::size_t n) {
  const Trivector t = load_trivector(input, n);
  Outcome o;
  o.payload["trivector"] = format_trivector(t);
  o.payload["n"] = t.n();
  o.payload["rank"] = trivector_rank(t);
  json ker = json::array();
  for (const auto &v : trivector_kernel(t).vectors())
    ker.push_back(io::vec_to_json(v));
  o.payload["kernel"] = ker;
  o.text = summary_of(o.payload);
  return o;
}

Outcome cmd_random(std::size_t n, std::uint64_t seed, double density, std::size_t sweep, Format fmt) {
  if (n < 3)
    throw InputError("random needs --n >= 3");
  if (sweep > 0) {
    std::size_t reduced = 0, nonzero = 0;
    for (std::size_t s = 0; s < sweep; ++s) {
      Rng rng(seed + s);
      const CocycleCoeffs c = random_cocycle(n, rng, density);
      if (c.is_zero())
        continue;
      ++nonzero;
      reduced += is_reduced(tstar_extend(c).alg()) ? 1 : 0;
    }
    Outcome o;
    o.payload["n"] = n;
    o.payload["first_seed"] = seed;
    o.payload["seeds"] = sweep;
    o.payload["nonzero"] = nonzero;
    o.payload["reduced"] = reduced;
    o.payload["fraction"] = Scalar(static_cast<long>(reduced), static_cast<long>(sweep)).str();
    o.text = summary_of(o.payload);
    return o;
  }
  Rng rng(seed);
  const CocycleCoeffs c = random_cocycle(n, rng, density);
  json extra;
  extra["seed"] = seed;
  extra["n"] = n;
  extra["trivector"] = format_trivector(delta(c));
  extra["cocycle"] = io::coeffs_to_json(c);
  extra["trivector_rank"] = trivector_rank(delta(c));
  if (c.is_zero()) {
    Outcome o;
    o.payload = extra;
    o.text = summary_of(extra);
    return o;
  }
  return algebra_outcome(tstar_extend(c), fmt, extra);
}

Outcome cmd_decompose(const std::string &path, const std::string &ideal_path, Format fmt) {
  const QuadraticStructure q = load_quadratic(path);
  std::optional<Subspace> ideal;
  if (!ideal_path.empty()) {
    const json j = io::read_file(ideal_path);
    std::vector<Vec> vs;
    for (const auto &v : j.is_object() ? j.at("vectors") : j)
      vs.push_back(io::vec_from_json(v, q.dim()));
    ideal = Subspace::span(q.dim(), vs);
  } else {
    ideal = find_lagrangian_ideal(q);
  }
  if (!ideal)
    throw InputError("no lagrangian ideal found; pass one with --ideal");
  const TstarDecomposition d = decompose_as_tstar(q, *ideal);
  Outcome o;
  o.payload["base"] = io::algebra_to_json(d.base);
  o.payload["cocycle"] = io::cocycle_to_json(d.cocycle);
  o.payload["iso"] = io::mat_to_json(d.iso);
  o.payload["isometric"] = true;
  if (d.base.is_abelian())
    o.payload["trivector"] = format_trivector(delta(algebra_to_coeffs(tstar_extend(d.cocycle))));
  o.text = fmt == Format::Latex ? latex_table(tstar_extend(d.cocycle).alg()) : summary_of(o.payload);
  return o;
}

Outcome cmd_selftest() {
  Outcome o = cmd_catalog("", false, true, Format::Json);
  std::size_t roads = 0;
  for (const auto &e : catalog())
    roads += all_roads(delta_inv(e.coeffs())).ok() ? 1 : 0;
  o.payload["all_roads"] = roads;
  o.ok = o.ok && roads == catalog().size();
  o.text += "all_roads: " + std::to_string(roads) + "/" + std::to_string(catalog().size()) + "\n";
  return o;
}

Format format_from(const std::string &s) {
  if (s == "json")
    return Format::Json;
  if (s == "latex")
    return Format::Latex;
  if (s == "summary")
    return Format::Summary;
  throw InputError("unknown format '" + s + "'");
}

json error_json(const std::string &command, const std::string &message) {
  return {{"ok", false}, {"command", command}, {"error", message}};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact constructions and checks for quadratic 2-step Lie algebras", "quadlie"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "json";
  app.add_option("--format", format_name, "json, latex or summary (QUADLIE_FORMAT overrides)")
      ->check(CLI::IsMember({"json", "latex", "summary"}));
  RunConfig cfg;
  std::string label, from, to, chain_path, alg_path, der_path, ideal_path;
  bool counts = false, all = false, validate = false, to_algebra = false;
  double density = 1.0;
  std::size_t sweep = 0;

  auto *verify = app.add_subcommand("verify", "check an algebra file");
  verify->add_option("path", cfg.inputs, "algebra JSON")->required();
  auto *cat = app.add_subcommand("catalog", "the 22 reduced quadratic 2-step algebras");
  cat->add_option("label", label, "e.g. L6,2");
  cat->add_flag("--counts", counts, "number of entries per dimension");
  cat->add_flag("--all", all, "verify every entry");
  auto *conv = app.add_subcommand("convert", "change representation");
  conv->add_option("--from", from)->required();
  conv->add_option("--to", to)->required();
  conv->add_option("--n", cfg.n, "ambient size for trivector text");
  conv->add_option("input", cfg.inputs, "file, or trivector text")->required();
  auto *ext = app.add_subcommand("extend", "double extensions");
  ext->add_option("--chain", chain_path, "chain JSON");
  ext->add_option("--algebra", alg_path, "quadratic algebra JSON");
  ext->add_option("--derivation", der_path, "derivation matrix JSON");
  auto *ts = app.add_subcommand("tstar", "T*-extension of a cocycle");
  ts->add_option("input", cfg.inputs, "cocycle JSON or trivector text")->required();
  ts->add_option("--n", cfg.n, "ambient size for trivector text");
  auto *fam = app.add_subcommand("family", "n-quadratic families");
  fam->add_option("path", cfg.inputs, "family JSON")->required();
  fam->add_flag("--validate", validate, "check the three laws (default)");
  fam->add_flag("--to-algebra", to_algebra, "build the algebra");
  auto *rk = app.add_subcommand("rank", "trivector rank and kernel");
  rk->add_option("input", cfg.inputs, "trivector text or JSON")->required();
  rk->add_option("--n", cfg.n, "ambient size");
  auto *rnd = app.add_subcommand("random", "seeded random cocycles");
  rnd->add_option("--n", cfg.n, "base dimension")->required();
  rnd->add_option("--seed", cfg.seed, "PRNG seed");
  rnd->add_option("--density", density, "probability of drawing each coefficient")->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--sweep", sweep, "report the reduced fraction over this many consecutive seeds");
  auto *dec = app.add_subcommand("decompose", "recover a T*-extension from a lagrangian ideal");
  dec->add_option("path", cfg.inputs, "quadratic algebra JSON")->required();
  dec->add_option("--ideal", ideal_path, "JSON list of spanning vectors");
  auto *self = app.add_subcommand("selftest", "catalog and equivalence checks");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    if (code != 0)
      err << error_json("", e.what()).dump() << "\n";
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (auto *sub : app.get_subcommands())
    command = sub->get_name();
  cfg.command = command;
  try {
    if (const char *env = std::getenv("QUADLIE_FORMAT"); env && *env)
      format_name = env;
    cfg.format = format_from(format_name);
    const std::string input = cfg.inputs.empty() ? "" : cfg.inputs.front();
    Outcome o;
    if (verify->parsed())
      o = cmd_verify(input, cfg.format);
    else if (cat->parsed())
      o = cmd_catalog(label, counts, all, cfg.format);
    else if (conv->parsed())
      o = cmd_convert(from, to, input, cfg.n, cfg.format);
    else if (ext->parsed())
      o = cmd_extend(chain_path, alg_path, der_path, cfg.format);
    else if (ts->parsed())
      o = cmd_tstar(input, cfg.n, cfg.format);
    else if (fam->parsed())
      o = cmd_family(input, to_algebra, cfg.format);
    else if (rk->parsed())
      o = cmd_rank(input, cfg.n);
    else if (rnd->parsed())
      o = cmd_random(cfg.n, cfg.seed, density, sweep, cfg.format);
    else if (dec->parsed())
      o = cmd_decompose(input, ideal_path, cfg.format);
    else if (self->parsed())
      o = cmd_selftest();

    if (cfg.format == Format::Json)
      out << o.payload.dump(2) << "\n";
    else
      out << o.text;
    if (!o.ok) {
      json fail = {{"ok", false}, {"command", command}, {"error", "checks failed"}};
      if (o.payload.contains("report"))
        fail["report"] = o.payload["report"];
      err << fail.dump() << "\n";
      return 1;
    }
    return 0;
  } catch (const io::ParseError &e) {
    json fail = error_json(command, e.what());
    if (e.line() > 0) {
      fail["line"] = e.line();
      fail["column"] = e.column();
    }
    err << fail.dump() << "\n";
    return 2;
  } catch (const ValidationError &e) {
    err << error_json(command, e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << error_json(command, e.what()).dump() << "\n";
    return 2;
  }
}

} // namespace quadlie::cli
