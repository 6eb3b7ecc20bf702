#include "caforge/reports.hpp"

#include "caforge/poly_io.hpp"

namespace caforge {

namespace {

const char* outcome_name(TupleOutcome o) {
  switch (o) {
    case TupleOutcome::regular:
      return "regular";
    case TupleOutcome::non_regular:
      return "non_regular";
    default:
      return "budget";
  }
}

}  // namespace

ordered_json report_json(const CAReport& r) {
  ordered_json j;
  j["poly"] = serialize(r.f);
  j["n"] = r.f.degree();
  j["field"] = r.f.field().name();
  j["gcd_degrees"] = r.gcd_degrees;
  j["satisfies_hypothesis"] = r.satisfies_hypothesis;
  j["is_pure_power"] = r.is_pure_power;
  j["is_counterexample"] = r.is_counterexample;
  return j;
}

ordered_json report_json(const SearchResult& r) {
  ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["scanned"] = r.scanned;
  j["count"] = r.counterexamples.size();
  ordered_json list = ordered_json::array();
  for (const CAReport& c : r.counterexamples) list.push_back(report_json(c));
  j["counterexamples"] = std::move(list);
  j["cross_validated"] = r.cross_validated;
  return j;
}

ordered_json report_json(const BadPrimeScan& r) {
  ordered_json j;
  j["n"] = r.n;
  j["pmax"] = r.pmax;
  ordered_json list = ordered_json::array();
  for (const BadPrimeEntry& e : r.entries) {
    ordered_json row;
    row["p"] = e.p;
    if (e.skipped) {
      row["status"] = "skipped";
    } else {
      row["status"] = "scanned";
      row["count"] = e.count;
      row["cross_validated"] = e.cross_validated;
    }
    list.push_back(std::move(row));
  }
  j["primes"] = std::move(list);
  return j;
}

ordered_json report_json(const SweepReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["n"] = r.n;
  j["length"] = r.length;
  j["field"] = r.field;
  j["tuples"] = r.results.size();
  j["verdict"] = r.any_budget ? "inconclusive"
                              : (r.all_regular ? "all_regular" : "non_regular_found");
  ordered_json list = ordered_json::array();
  for (const TupleResult& t : r.results) {
    ordered_json row;
    row["tuple"] = t.tuple;
    row["outcome"] = outcome_name(t.outcome);
    if (t.outcome != TupleOutcome::budget) row["dimension"] = t.dimension;
    list.push_back(std::move(row));
  }
  j["results"] = std::move(list);
  return j;
}

ordered_json report_json(const FiberScanReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["tuple"] = r.tuple;
  ordered_json list = ordered_json::array();
  for (const FiberResult& f : r.fibers) {
    ordered_json row;
    row["alpha"] = f.alpha;
    if (f.budget) {
      row["status"] = "budget";
    } else {
      row["status"] = "computed";
      row["dimension"] = f.dimension;
      row["singular"] = f.singular;
    }
    list.push_back(std::move(row));
  }
  j["fibers"] = std::move(list);
  return j;
}

ordered_json report_json(const JcReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["lmax"] = r.lmax;
  j["q"] = r.q;
  j["verified"] = r.verified;
  j["failure_found"] = r.failure_found;
  j["budget_hit"] = r.budget_hit;
  return j;
}

ordered_json report_json(const Prop2Report& r) {
  ordered_json j;
  j["shape"] = r.shape;
  j["level"] = r.level;
  j["components"] = r.components;
  ordered_json fwd = ordered_json::array();
  for (const Prop2Report::Containment& c : r.forward) {
    ordered_json row;
    row["component"] = c.component;
    row["generator"] = c.generator;
    row["ok"] = c.ok;
    fwd.push_back(std::move(row));
  }
  j["forward"] = std::move(fwd);
  ordered_json rev = ordered_json::array();
  for (const Prop2Report::RadicalCert& c : r.reverse) {
    ordered_json row;
    row["monomial"] = c.monomial;
    row["ok"] = c.ok;
    rev.push_back(std::move(row));
  }
  j["reverse"] = std::move(rev);
  j["verified"] = r.verified;
  return j;
}

ordered_json report_json(const LinearReduction& r) {
  ordered_json j;
  j["nvars"] = r.nvars;
  j["remaining"] = r.remaining;
  j["log"] = r.log;
  j["unit_ideal"] = r.unit_ideal;
  ordered_json gens = ordered_json::array();
  for (const MPoly& g : r.gens) gens.push_back(serialize(g));
  j["generators"] = std::move(gens);
  return j;
}

ordered_json points_json(const std::vector<std::vector<std::uint32_t>>& points) {
  ordered_json j = ordered_json::array();
  for (const auto& pt : points) j.push_back(pt);
  return j;
}

ordered_json disc_json(const DiscTable& t) {
  ordered_json j;
  j["n"] = t.n;
  j["weights"] = coefficient_weights(t.n);
  ordered_json list = ordered_json::array();
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    ordered_json row;
    row["i"] = k + 1;
    row["weighted_degree"] = static_cast<long>(t.n) * (t.n - static_cast<int>(k) - 1);
    row["full"] = serialize(t.entries[k], RingNames::ys(t.n));
    row["reduced"] = serialize(t.reduced[k], RingNames::ys(t.n - 1));
    list.push_back(std::move(row));
  }
  j["discriminants"] = std::move(list);
  return j;
}

}  // namespace caforge
