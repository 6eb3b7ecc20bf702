#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caforge/ca_geometry.hpp"
#include "caforge/ca_search.hpp"
#include "caforge/discriminants.hpp"
#include "caforge/groebner.hpp"
#include "caforge/hasse_schmidt.hpp"
#include "caforge/monomial_dsub.hpp"
#include "caforge/poly_io.hpp"
#include "caforge/reports.hpp"

namespace {

using namespace caforge;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  bool json = false;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSPairBudget;
  int workers = 1;
  std::string field = "QQ";
};

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "emit a JSON document instead of text");
  cmd->add_option("--out", c.out, "write the report to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "seed echoed into the config header");
}

Field parse_field(const std::string& s) {
  if (s == "QQ" || s == "Q") return Field::rationals();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || p == 0)
    throw std::invalid_argument("--field expects QQ or a prime modulus, got '" + s + "'");
  return Field::prime(static_cast<std::uint32_t>(p));
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = item.find_last_not_of(" \t");
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split_list(s, ',')) out.push_back(std::stoi(part));
  if (out.empty()) throw std::invalid_argument("--tuple must list at least one index");
  return out;
}

std::vector<unsigned> parse_shape(const std::string& s) {
  std::vector<unsigned> out;
  for (const std::string& part : split_list(s, ',')) {
    int v = std::stoi(part);
    if (v < 0) throw std::invalid_argument("--shape entries must be non-negative");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("--shape must list at least one exponent");
  return out;
}

std::vector<Coeff> parse_alphas(const std::string& s, const Field& f) {
  std::vector<Coeff> out;
  for (const std::string& part : split_list(s, ',')) out.push_back(parse_coeff(part, f));
  if (out.empty()) throw std::invalid_argument("--alphas must list at least one value");
  return out;
}

std::string config_line(const ordered_json& config) {
  std::string line = "config:";
  for (const auto& [key, value] : config.items()) {
    line += " " + key + "=";
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  return line + "\n";
}

int emit(const Common& c, ordered_json config, ordered_json report,
         const std::string& text, int code) {
  std::string payload;
  if (c.json) {
    ordered_json doc;
    doc["config"] = std::move(config);
    doc["report"] = std::move(report);
    payload = doc.dump(2) + "\n";
  } else {
    payload = config_line(config) + text;
  }
  if (c.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + c.out + "'");
    f << payload;
  }
  return code;
}

ordered_json base_config(const char* cmd, const Common& c) {
  ordered_json j;
  j["cmd"] = cmd;
  j["json"] = c.json;
  j["seed"] = c.seed;
  return j;
}

std::string render_sweep_text(const SweepReport& r) {
  std::ostringstream out;
  std::size_t regular = 0;
  for (const TupleResult& t : r.results)
    if (t.outcome == TupleOutcome::regular) ++regular;
  out << regular << "/" << r.results.size() << " tuples regular\n";
  for (const TupleResult& t : r.results) {
    if (t.outcome == TupleOutcome::regular) continue;
    out << "tuple";
    for (int v : t.tuple) out << " " << v;
    if (t.outcome == TupleOutcome::budget)
      out << ": budget\n";
    else
      out << ": non-regular, dimension " << t.dimension << "\n";
  }
  out << "verdict: "
      << (r.any_budget ? "inconclusive" : (r.all_regular ? "all_regular" : "non_regular_found"))
      << "\n";
  return out.str();
}

int sweep_exit(const SweepReport& r) {
  bool failure = false;
  for (const TupleResult& t : r.results)
    if (t.outcome == TupleOutcome::non_regular) failure = true;
  if (failure) return kExitVerificationFailure;
  if (r.any_budget) return kExitBudget;
  return kExitOk;
}

// ---- subcommand drivers ----

struct HsArgs {
  Common common;
  std::string uni, multi;
  int nvars = 2;
  unsigned order = 1;
  bool directional = false;
};

int run_hs(const HsArgs& a) {
  Field f = parse_field(a.common.field);
  if (a.uni.empty() == a.multi.empty())
    throw std::invalid_argument("hs: provide exactly one of --uni or --multi");
  ordered_json config = base_config("hs", a.common);
  config["i"] = a.order;
  config["field"] = f.name();
  std::string result;
  if (!a.uni.empty()) {
    config["uni"] = a.uni;
    result = serialize(hs_uni(parse_upoly(a.uni, f), a.order));
  } else {
    config["multi"] = a.multi;
    config["nvars"] = a.nvars;
    config["directional"] = a.directional;
    MPoly p = parse_poly(a.multi, a.nvars, f);
    result = serialize(a.directional ? d_power(p, a.order) : hs_multi(p, a.order));
  }
  ordered_json report;
  report["result"] = result;
  return emit(a.common, std::move(config), std::move(report), result + "\n", kExitOk);
}

struct DiscArgs {
  Common common;
  int n = 0;
  int index = 0;
  bool regen = false;
};

int run_disc(const DiscArgs& a) {
  ordered_json config = base_config("disc", a.common);
  config["n"] = a.n;
  config["i"] = a.index;
  config["regen"] = a.regen;
  DiscTable table = a.regen ? disc_table_regen(a.n) : disc_table_cached(a.n);
  if (a.index != 0 && (a.index < 1 || a.index > a.n - 1))
    throw std::invalid_argument("disc: --i must be in [1, n-1]");
  ordered_json report;
  std::ostringstream text;
  if (a.index == 0) {
    report = disc_json(table);
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      text << "disc_" << (k + 1) << ": "
           << serialize(table.entries[k], RingNames::ys(a.n)) << "\n";
      text << "reduced_" << (k + 1) << ": "
           << serialize(table.reduced[k], RingNames::ys(a.n - 1)) << "\n";
    }
  } else {
    std::size_t k = static_cast<std::size_t>(a.index - 1);
    report["n"] = a.n;
    report["i"] = a.index;
    report["weights"] = coefficient_weights(a.n);
    report["weighted_degree"] = static_cast<long>(a.n) * (a.n - a.index);
    report["full"] = serialize(table.entries[k], RingNames::ys(a.n));
    report["reduced"] = serialize(table.reduced[k], RingNames::ys(a.n - 1));
    text << "disc_" << a.index << ": " << serialize(table.entries[k], RingNames::ys(a.n))
         << "\n";
    text << "reduced_" << a.index << ": "
         << serialize(table.reduced[k], RingNames::ys(a.n - 1)) << "\n";
  }
  return emit(a.common, std::move(config), std::move(report), text.str(), kExitOk);
}

struct DsubArgs {
  Common common;
  std::string shape;
  int level = 1;
};

int run_dsub(const DsubArgs& a) {
  std::vector<unsigned> shape = parse_shape(a.shape);
  ordered_json config = base_config("dsub", a.common);
  config["shape"] = shape;
  config["level"] = a.level;
  config["budget"] = a.common.budget;
  Prop2Report rep = verify_prop2(shape, a.level, a.common.budget);
  std::ostringstream text;
  text << "components:";
  for (const auto& comp : rep.components) {
    text << " {";
    for (std::size_t i = 0; i < comp.size(); ++i)
      text << (i ? "," : "") << "x" << (comp[i] + 1);
    text << "}";
  }
  text << "\n"
       << "verified: " << (rep.verified ? "true" : "false") << "\n";
  return emit(a.common, std::move(config), report_json(rep), text.str(),
              rep.verified ? kExitOk : kExitVerificationFailure);
}

struct GeomArgs {
  Common common;
  int n = 0;
  std::string tuple;
  std::string vieta;
  bool deformed = false;
};

int run_geom(const GeomArgs& a) {
  Field f = parse_field(a.common.field);
  ordered_json config = base_config("geom", a.common);
  config["n"] = a.n;
  config["field"] = f.name();
  ordered_json report;
  std::ostringstream text;
  if (!a.vieta.empty()) {
    config["vieta"] = a.vieta;
    std::vector<Coeff> point = parse_alphas(a.vieta, f);
    RootTuple coeffs = vieta_map(point);
    ordered_json values = ordered_json::array();
    for (const Coeff& c : coeffs) {
      values.push_back(c.str());
      text << c.str() << "\n";
    }
    report["coefficients"] = std::move(values);
  } else {
    if (a.tuple.empty())
      throw std::invalid_argument("geom: provide --tuple or --vieta");
    std::vector<int> tuple = parse_tuple(a.tuple);
    config["tuple"] = tuple;
    config["deformed"] = a.deformed;
    std::vector<MPoly> gens = tuple_ideal_generators(a.n, tuple, a.deformed, f);
    RingNames names = a.deformed ? RingNames::xs_T(a.n - 1) : RingNames::xs(a.n - 1);
    ordered_json list = ordered_json::array();
    for (const MPoly& g : gens) {
      list.push_back(serialize(g, names));
      text << serialize(g, names) << "\n";
    }
    report["generators"] = std::move(list);
  }
  return emit(a.common, std::move(config), std::move(report), text.str(), kExitOk);
}

struct GbArgs {
  Common common;
  std::string gens;
  int nvars = 0;
};

int run_gb(const GbArgs& a) {
  Field f = parse_field(a.common.field);
  std::vector<std::string> parts = split_list(a.gens, ';');
  if (parts.empty()) throw std::invalid_argument("gb: --gens must list generators");
  std::vector<MPoly> gens;
  for (const std::string& part : parts) gens.push_back(parse_poly(part, a.nvars, f));
  ordered_json config = base_config("gb", a.common);
  config["nvars"] = a.nvars;
  config["field"] = f.name();
  config["gens"] = parts;
  config["budget"] = a.common.budget;
  GBOptions opts;
  opts.budget = a.common.budget;
  std::vector<MPoly> basis = buchberger(gens, opts);
  int dim = dimension_from_basis(basis, a.nvars, opts.order);
  ordered_json report;
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (const MPoly& g : basis) {
    list.push_back(serialize(g));
    text << serialize(g) << "\n";
  }
  report["basis"] = std::move(list);
  report["unit_ideal"] = is_unit_ideal(basis);
  report["dimension"] = dim;
  text << "dimension: " << dim << "\n";
  return emit(a.common, std::move(config), std::move(report), text.str(), kExitOk);
}

struct CaCheckArgs {
  Common common;
  std::string poly;
};

int run_ca_check(const CaCheckArgs& a) {
  Field f = parse_field(a.common.field);
  UPoly poly = parse_upoly(a.poly, f);
  ordered_json config = base_config("ca-check", a.common);
  config["poly"] = a.poly;
  config["field"] = f.name();
  CAReport rep = ca_check(poly);
  std::ostringstream text;
  text << "poly: " << serialize(rep.f) << "\n" << "gcd_degrees:";
  for (long d : rep.gcd_degrees) text << " " << d;
  text << "\n"
       << "satisfies_hypothesis: " << (rep.satisfies_hypothesis ? "true" : "false") << "\n"
       << "is_pure_power: " << (rep.is_pure_power ? "true" : "false") << "\n"
       << "is_counterexample: " << (rep.is_counterexample ? "true" : "false") << "\n";
  return emit(a.common, std::move(config), report_json(rep), text.str(),
              rep.is_counterexample ? kExitVerificationFailure : kExitOk);
}

struct SearchArgs {
  Common common;
  int n = 0;
  std::uint32_t p = 0;
  int level = -1;  // when set, list weighted points instead of scanning
};

int run_search(const SearchArgs& a) {
  ordered_json config = base_config("search", a.common);
  config["n"] = a.n;
  config["p"] = a.p;
  config["budget"] = a.common.budget;
  if (a.level >= 0) {
    config["level"] = a.level;
    std::vector<std::vector<std::uint32_t>> points =
        enumerate_xn_points(a.n, a.p, a.level, a.common.budget);
    ordered_json report;
    report["points"] = points_json(points);
    report["count"] = points.size();
    std::ostringstream text;
    for (const auto& pt : points) {
      text << "point:";
      for (std::uint32_t v : pt) text << " " << v;
      text << "\n";
    }
    text << "points: " << points.size() << "\n";
    return emit(a.common, std::move(config), std::move(report), text.str(), kExitOk);
  }
  SearchResult res = search_counterexamples(a.n, a.p, a.common.budget);
  std::ostringstream text;
  text << "scanned: " << res.scanned << "\n";
  for (const CAReport& c : res.counterexamples)
    text << "counterexample: " << serialize(c.f) << "\n";
  text << "counterexamples: " << res.counterexamples.size() << "\n"
       << "cross_validated: " << (res.cross_validated ? "true" : "false") << "\n";
  return emit(a.common, std::move(config), report_json(res), text.str(),
              res.cross_validated ? kExitOk : kExitVerificationFailure);
}

struct BadPrimesArgs {
  Common common;
  int n = 0;
  std::uint32_t pmax = 0;
};

int run_badprimes(const BadPrimesArgs& a) {
  ordered_json config = base_config("badprimes", a.common);
  config["n"] = a.n;
  config["pmax"] = a.pmax;
  config["budget"] = a.common.budget;
  BadPrimeScan scan = bad_prime_scan(a.n, a.pmax, a.common.budget);
  std::ostringstream text;
  bool coherent = true;
  for (const BadPrimeEntry& e : scan.entries) {
    if (e.skipped) {
      text << "p=" << e.p << " skipped\n";
    } else {
      text << "p=" << e.p << " count=" << e.count
           << " cross_validated=" << (e.cross_validated ? "true" : "false") << "\n";
      if (!e.cross_validated) coherent = false;
    }
  }
  return emit(a.common, std::move(config), report_json(scan), text.str(),
              coherent ? kExitOk : kExitVerificationFailure);
}

struct RegseqArgs {
  Common common;
  int n = 0;
  int length = 0;  // 0 = n-1
};

int run_regseq(const RegseqArgs& a) {
  Field f = parse_field(a.common.field);
  int length = a.length == 0 ? a.n - 1 : a.length;
  ordered_json config = base_config("regseq", a.common);
  config["n"] = a.n;
  config["l"] = length;
  config["field"] = f.name();
  config["budget"] = a.common.budget;
  config["workers"] = a.common.workers;
  SweepReport rep =
      tuple_regularity_sweep(a.n, length, f, a.common.budget, a.common.workers);
  return emit(a.common, std::move(config), report_json(rep), render_sweep_text(rep),
              sweep_exit(rep));
}

struct MainPropArgs {
  Common common;
  int n = 0;
};

int run_mainprop(const MainPropArgs& a) {
  ordered_json config = base_config("mainprop", a.common);
  config["n"] = a.n;
  config["budget"] = a.common.budget;
  config["workers"] = a.common.workers;
  SweepReport rep = mainprop_verify(a.n, a.common.budget, a.common.workers);
  std::ostringstream text;
  std::size_t ok = 0;
  for (const TupleResult& t : rep.results)
    if (t.outcome == TupleOutcome::regular) ++ok;
  text << ok << "/" << rep.results.size() << " tuples at saturated dimension 1\n";
  for (const TupleResult& t : rep.results) {
    if (t.outcome == TupleOutcome::regular) continue;
    text << "tuple";
    for (int v : t.tuple) text << " " << v;
    if (t.outcome == TupleOutcome::budget)
      text << ": budget\n";
    else
      text << ": dimension " << t.dimension << "\n";
  }
  return emit(a.common, std::move(config), report_json(rep), text.str(), sweep_exit(rep));
}

struct FibersArgs {
  Common common;
  int n = 0;
  std::string tuple;
  std::string alphas;
};

int run_fibers(const FibersArgs& a) {
  std::vector<int> tuple = parse_tuple(a.tuple);
  std::vector<Coeff> alphas = parse_alphas(a.alphas, Field::rationals());
  ordered_json config = base_config("fibers", a.common);
  config["n"] = a.n;
  config["tuple"] = tuple;
  config["alphas"] = a.alphas;
  config["budget"] = a.common.budget;
  FiberScanReport rep = fiber_scan(a.n, tuple, alphas, a.common.budget);
  std::ostringstream text;
  bool any_budget = false;
  for (const FiberResult& fr : rep.fibers) {
    if (fr.budget) {
      text << "alpha=" << fr.alpha << " budget\n";
      any_budget = true;
    } else {
      text << "alpha=" << fr.alpha << " dimension=" << fr.dimension
           << (fr.singular ? " singular" : " non-singular") << "\n";
    }
  }
  return emit(a.common, std::move(config), report_json(rep), text.str(),
              any_budget ? kExitBudget : kExitOk);
}

struct JcArgs {
  Common common;
  int n = 0;
  int lmax = 0;  // 0 = n-1
};

int run_jc(const JcArgs& a) {
  Field f = parse_field(a.common.field);
  int lmax = a.lmax == 0 ? a.n - 1 : a.lmax;
  ordered_json config = base_config("jc", a.common);
  config["n"] = a.n;
  config["lmax"] = lmax;
  config["field"] = f.name();
  config["budget"] = a.common.budget;
  config["workers"] = a.common.workers;
  JcReport rep = jc_lower_bound(a.n, lmax, f, a.common.budget, a.common.workers);
  std::ostringstream text;
  text << "q: " << rep.q << "\n"
       << "verified: " << (rep.budget_hit ? ">= " : "") << rep.verified << "\n"
       << "failure_found: " << (rep.failure_found ? "true" : "false") << "\n";
  return emit(a.common, std::move(config), report_json(rep), text.str(),
              rep.budget_hit ? kExitBudget : kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the Casas-Alvero conjecture"};
  app.require_subcommand(1);

  HsArgs hs_args;
  CLI::App* hs_cmd = app.add_subcommand("hs", "divided-power derivatives");
  hs_cmd->add_option("--uni", hs_args.uni, "univariate polynomial in X");
  hs_cmd->add_option("--multi", hs_args.multi, "multivariate polynomial in x1..xk");
  hs_cmd->add_option("--nvars", hs_args.nvars, "variable count for --multi")
      ->default_val(2);
  hs_cmd->add_option("--i", hs_args.order, "derivative order")->required();
  hs_cmd->add_flag("--directional", hs_args.directional,
                   "iterate the total derivative instead of the divided power");
  hs_cmd->add_option("--field", hs_args.common.field, "QQ or a prime modulus");
  add_output_flags(hs_cmd, hs_args.common);

  DiscArgs disc_args;
  CLI::App* disc_cmd = app.add_subcommand("disc", "higher discriminant tables");
  disc_cmd->add_option("--n", disc_args.n, "degree of the generic polynomial")
      ->required();
  disc_cmd->add_option("--i", disc_args.index, "single derivative index (0 = all)");
  disc_cmd->add_flag("--regen", disc_args.regen,
                     "recompute and cross-check the cached table");
  add_output_flags(disc_cmd, disc_args.common);

  DsubArgs dsub_args;
  CLI::App* dsub_cmd =
      app.add_subcommand("dsub", "derivative thickenings of a monomial");
  dsub_cmd->add_option("--shape", dsub_args.shape, "monomial exponents, e.g. 2,1")
      ->required();
  dsub_cmd->add_option("--level", dsub_args.level, "thickening level")->required();
  dsub_cmd->add_option("--budget", dsub_args.common.budget, "S-pair reduction cap");
  add_output_flags(dsub_cmd, dsub_args.common);

  GeomArgs geom_args;
  CLI::App* geom_cmd = app.add_subcommand("geom", "tuple ideals and the Vieta map");
  geom_cmd->add_option("--n", geom_args.n, "degree")->required();
  geom_cmd->add_option("--tuple", geom_args.tuple, "index tuple, e.g. 3,3");
  geom_cmd->add_flag("--deformed", geom_args.deformed, "one-parameter deformation");
  geom_cmd->add_option("--vieta", geom_args.vieta, "point whose coefficients to list");
  geom_cmd->add_option("--field", geom_args.common.field, "QQ or a prime modulus");
  add_output_flags(geom_cmd, geom_args.common);

  GbArgs gb_args;
  CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis and dimension");
  gb_cmd->add_option("--gens", gb_args.gens, "generators separated by ';'")->required();
  gb_cmd->add_option("--nvars", gb_args.nvars, "ambient variable count")->required();
  gb_cmd->add_option("--field", gb_args.common.field, "QQ or a prime modulus");
  gb_cmd->add_option("--budget", gb_args.common.budget, "S-pair reduction cap");
  add_output_flags(gb_cmd, gb_args.common);

  CaCheckArgs ca_args;
  CLI::App* ca_cmd = app.add_subcommand("ca-check", "hypothesis report for one polynomial");
  ca_cmd->add_option("--poly", ca_args.poly, "monic polynomial in X")->required();
  ca_cmd->add_option("--field", ca_args.common.field, "QQ or a prime modulus");
  add_output_flags(ca_cmd, ca_args.common);

  SearchArgs search_args;
  CLI::App* search_cmd =
      app.add_subcommand("search", "exhaustive counterexample scan over F_p");
  search_cmd->add_option("--n", search_args.n, "degree")->required();
  search_cmd->add_option("--p", search_args.p, "prime modulus")->required();
  search_cmd->add_option("--level", search_args.level,
                         "list weighted points of the level cut instead of scanning");
  search_cmd->add_option("--budget", search_args.common.budget, "enumeration cap")
      ->default_val(kDefaultEnumBudget);
  add_output_flags(search_cmd, search_args.common);

  BadPrimesArgs bad_args;
  CLI::App* bad_cmd = app.add_subcommand("badprimes", "per-prime counterexample counts");
  bad_cmd->add_option("--n", bad_args.n, "degree")->required();
  bad_cmd->add_option("--pmax", bad_args.pmax, "largest prime to scan")->required();
  bad_cmd->add_option("--budget", bad_args.common.budget, "per-prime enumeration cap")
      ->default_val(kDefaultEnumBudget);
  add_output_flags(bad_cmd, bad_args.common);

  RegseqArgs regseq_args;
  CLI::App* regseq_cmd =
      app.add_subcommand("regseq", "regularity sweep over all index tuples");
  regseq_cmd->add_option("--n", regseq_args.n, "degree")->required();
  regseq_cmd->add_option("--l", regseq_args.length, "tuple length (default n-1)");
  regseq_cmd->add_option("--field", regseq_args.common.field, "QQ or a prime modulus");
  regseq_cmd->add_option("--budget", regseq_args.common.budget, "S-pair reduction cap");
  regseq_cmd->add_option("--workers", regseq_args.common.workers, "worker threads");
  add_output_flags(regseq_cmd, regseq_args.common);

  MainPropArgs main_args;
  CLI::App* main_cmd =
      app.add_subcommand("mainprop", "saturated dimension of the deformed tuple ideals");
  main_cmd->add_option("--n", main_args.n, "degree")->required();
  main_cmd->add_option("--budget", main_args.common.budget, "S-pair reduction cap");
  main_cmd->add_option("--workers", main_args.common.workers, "worker threads");
  add_output_flags(main_cmd, main_args.common);

  FibersArgs fiber_args;
  CLI::App* fiber_cmd = app.add_subcommand("fibers", "fiber dimensions of a deformation");
  fiber_cmd->add_option("--n", fiber_args.n, "degree")->required();
  fiber_cmd->add_option("--tuple", fiber_args.tuple, "index tuple, e.g. 3,3")->required();
  fiber_cmd->add_option("--alphas", fiber_args.alphas, "rational parameters, e.g. 0,1,2/3")
      ->required();
  fiber_cmd->add_option("--budget", fiber_args.common.budget, "S-pair reduction cap");
  add_output_flags(fiber_cmd, fiber_args.common);

  JcArgs jc_args;
  CLI::App* jc_cmd = app.add_subcommand("jc", "largest all-regular truncation level");
  jc_cmd->add_option("--n", jc_args.n, "degree")->required();
  jc_cmd->add_option("--lmax", jc_args.lmax, "length cap (default n-1)");
  jc_cmd->add_option("--field", jc_args.common.field, "QQ or a prime modulus");
  jc_cmd->add_option("--budget", jc_args.common.budget, "S-pair reduction cap");
  jc_cmd->add_option("--workers", jc_args.common.workers, "worker threads");
  add_output_flags(jc_cmd, jc_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (hs_cmd->parsed()) return run_hs(hs_args);
    if (disc_cmd->parsed()) return run_disc(disc_args);
    if (dsub_cmd->parsed()) return run_dsub(dsub_args);
    if (geom_cmd->parsed()) return run_geom(geom_args);
    if (gb_cmd->parsed()) return run_gb(gb_args);
    if (ca_cmd->parsed()) return run_ca_check(ca_args);
    if (search_cmd->parsed()) return run_search(search_args);
    if (bad_cmd->parsed()) return run_badprimes(bad_args);
    if (regseq_cmd->parsed()) return run_regseq(regseq_args);
    if (main_cmd->parsed()) return run_mainprop(main_args);
    if (fiber_cmd->parsed()) return run_fibers(fiber_args);
    if (jc_cmd->parsed()) return run_jc(jc_args);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
