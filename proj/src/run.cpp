#include "hypertree/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hypertree/asymptotics.hpp"
#include "hypertree/errors.hpp"
#include "hypertree/hypertree_count.hpp"
#include "hypertree/tree_shape.hpp"

namespace hypertree {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Report {
  Json json;
  std::string table;
};

std::int64_t require_n(const RunConfig& c) {
  if (!c.n) throw ValidationError("missing --n");
  return *c.n;
}

std::int64_t require_r(const RunConfig& c) {
  if (!c.r) throw ValidationError("missing --r");
  return *c.r;
}

DegreeSequence load_k(const RunConfig& c) {
  if (!c.degrees.empty()) {
    std::string text = c.degrees;
    if (text[0] == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw ValidationError("cannot read degree file: " + text.substr(1));
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    return DegreeSequence::parse(text);
  }
  if (c.n && c.k_regular > 0) return DegreeSequence::regular(*c.n, c.k_regular);
  throw ValidationError("missing --degrees (or --n together with --k)");
}

Json rational_json(const BigRat& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

std::string rational_str(const BigRat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Json estimate_json(const AsymptoticEstimate& e) {
  Json j;
  if (e.log_value.is_zero()) {
    j["log10_value"] = nullptr;
    j["value"] = 0.0;
  } else {
    j["log10_value"] = e.log_value.log10();
    double v = e.log_value.to_double();
    j["value"] = std::isfinite(v) ? Json(v) : Json(nullptr);
  }
  j["error_exponent_bound"] =
      std::isfinite(e.error_exponent_bound) ? Json(e.error_exponent_bound) : Json(nullptr);
  j["regime_ok"] = e.regime_ok;
  return j;
}

// 1-based vertex labels, matching the text format.
Json edges_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const Edge& e : h.edges) {
    Json row = Json::array();
    for (int v : e) row.push_back(v + 1);
    edges.push_back(std::move(row));
  }
  return edges;
}

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Report cmd_count_trees(const RunConfig& cfg) {
  std::int64_t n = require_n(cfg);
  std::int64_t r = require_r(cfg);
  TreeShape shape(n, r);
  BigInt count = count_hypertrees(n, r);
  Json j;
  j["n"] = n;
  j["r"] = r;
  j["t"] = shape.t;
  j["count"] = count.str();
  return {std::move(j), count.str() + "\n"};
}

Report cmd_tree_degree_count(const RunConfig& cfg) {
  std::int64_t r = require_r(cfg);
  if (cfg.x.empty()) throw ValidationError("missing --x");
  std::int64_t n = cfg.n ? *cfg.n : static_cast<std::int64_t>(cfg.x.size());
  BigInt count = count_hypertrees_with_degrees(n, r, cfg.x);
  Json j;
  j["n"] = n;
  j["r"] = r;
  j["x"] = cfg.x;
  j["count"] = count.str();
  return {std::move(j), count.str() + "\n"};
}

Report cmd_census(const RunConfig& cfg) {
  DegreeSequence k = load_k(cfg);
  std::int64_t r = require_r(cfg);
  CensusResult res = exact_expected_spanning_hypertrees(k, r, cfg.budget, cfg.threads);
  Json j;
  j["n"] = k.n();
  j["r"] = r;
  j["degrees"] = k.to_string();
  j["count"] = res.hypergraph_count.str();
  j["total_trees"] = res.total_spanning_trees.str();
  j["expectation_num"] = numerator(res.expectation).str();
  j["expectation_den"] = denominator(res.expectation).str();
  j["expectation_value"] = to_double(res.expectation);
  std::ostringstream table;
  table << "hypergraphs: " << res.hypergraph_count.str() << "\n"
        << "total spanning hypertrees: " << res.total_spanning_trees.str() << "\n"
        << "expectation: " << rational_str(res.expectation) << " = "
        << fmt(to_double(res.expectation)) << "\n";
  return {std::move(j), table.str()};
}

Report cmd_expected(const RunConfig& cfg) {
  DegreeSequence k = load_k(cfg);
  std::int64_t r = require_r(cfg);
  bool use_exact = cfg.exact;
  bool use_mc = cfg.mc;
  bool use_asym = cfg.asymptotic;
  if (!use_exact && !use_mc && !use_asym) use_asym = true;

  Json j;
  j["n"] = k.n();
  j["r"] = r;
  j["degrees"] = k.to_string();
  std::ostringstream table;

  if (use_exact) {
    CensusResult res = exact_expected_spanning_hypertrees(k, r, cfg.budget, cfg.threads);
    Json e;
    e["hypergraphs"] = res.hypergraph_count.str();
    e["total_trees"] = res.total_spanning_trees.str();
    e["expectation_num"] = numerator(res.expectation).str();
    e["expectation_den"] = denominator(res.expectation).str();
    e["value"] = to_double(res.expectation);
    j["exact"] = std::move(e);
    table << "exact: " << rational_str(res.expectation) << " = "
          << fmt(to_double(res.expectation)) << "\n";
  }
  if (use_mc) {
    McEstimate est = mc_expected_spanning_hypertrees(k, r, cfg.samples, cfg.seed,
                                                     cfg.max_rejects, cfg.threads);
    Json m;
    m["mean"] = est.mean;
    m["stderr"] = est.std_error;
    m["samples"] = est.samples;
    m["seed"] = est.seed;
    m["rejection_rate"] = est.rejection_rate;
    m["degenerate"] = est.degenerate;
    j["mc"] = std::move(m);
    table << "mc: " << fmt(est.mean) << " (stderr " << fmt(est.std_error, "%.6g")
          << ", samples " << est.samples << ", seed " << est.seed << ", rejection rate "
          << fmt(est.rejection_rate, "%.4g") << ")\n";
  }
  if (use_asym) {
    AsymptoticEstimate est = theorem1_estimate(k, r);
    j["asymptotic"] = estimate_json(est);
    if (est.log_value.is_zero()) {
      table << "asymptotic: 0\n";
    } else {
      table << "asymptotic: log10 = " << fmt(est.log_value.log10())
            << ", error exponent bound " << fmt(est.error_exponent_bound, "%.6g")
            << ", regime " << (est.regime_ok ? "ok" : "marginal") << "\n";
    }
  }
  return {std::move(j), table.str()};
}

constexpr int kProbabilityCensusPoints = 12;

Report cmd_probability(const RunConfig& cfg) {
  DegreeSequence k = load_k(cfg);
  std::int64_t r = require_r(cfg);
  if (cfg.x.empty()) throw ValidationError("missing --x");

  AsymptoticEstimate est = tree_probability_estimate(k, r, cfg.x);
  TreeShape shape(k.n(), r);
  BigRat lf = leading_factor(k, r, cfg.x, shape.t);
  BigRat g = g_exact(k, cfg.x, r);

  Json j;
  j["n"] = k.n();
  j["r"] = r;
  j["degrees"] = k.to_string();
  j["x"] = cfg.x;
  j["leading_factor"] = rational_json(lf);
  j["g"] = rational_json(g);
  j["estimate"] = estimate_json(est);

  std::ostringstream table;
  table << "leading factor: " << rational_str(lf) << "\n"
        << "g: " << rational_str(g) << "\n";
  if (est.log_value.is_zero())
    table << "estimate: 0\n";
  else
    table << "estimate: " << fmt(est.log_value.to_double()) << " (log10 "
          << fmt(est.log_value.log10()) << ")\n";

  j["census"] = nullptr;
  if (k.M() <= kProbabilityCensusPoints) {
    // Desk scale: exact containment frequency of one fixed hypertree with
    // degree vector x over the whole degree class.
    std::vector<Hypergraph> witness;
    for_each_hypertree(
        k.n(), r,
        [&](const Hypergraph& h) {
          if (witness.empty()) witness.push_back(h);
        },
        cfg.x);
    if (!witness.empty()) {
      const Hypergraph& w = witness.front();
      BigInt total = 0;
      BigInt containing = 0;
      try {
        for_each_hypergraph(
            k, r,
            [&](const Hypergraph& h) {
              ++total;
              if (std::includes(h.edges.begin(), h.edges.end(), w.edges.begin(),
                                w.edges.end()))
                ++containing;
            },
            cfg.budget);
        Json c;
        c["witness"] = edges_json(w);
        c["hypergraphs"] = total.str();
        c["containing"] = containing.str();
        if (total != 0) {
          BigRat freq(containing, total);
          c["frequency"] = rational_json(freq);
          table << "census frequency: " << rational_str(freq) << " over " << total.str()
                << " hypergraphs\n";
        } else {
          c["frequency"] = nullptr;
          table << "census frequency: degree class is empty\n";
        }
        j["census"] = std::move(c);
      } catch (const BudgetError&) {
        // leave census null: estimate alone is still a full report
      }
    }
  }
  return {std::move(j), table.str()};
}

Report cmd_moments(const RunConfig& cfg) {
  DegreeSequence k = load_k(cfg);
  std::int64_t r = require_r(cfg);
  TreeShape shape(k.n(), r);

  Json j;
  j["n"] = k.n();
  j["r"] = r;
  j["degrees"] = k.to_string();
  j["t"] = shape.t;
  std::ostringstream table;

  // One row per distinct degree value; the moment depends on j only via k_j.
  std::map<std::int64_t, std::pair<std::size_t, std::int64_t>> groups;  // degree -> (rep, count)
  for (std::size_t i = 0; i < static_cast<std::size_t>(k.n()); ++i) {
    auto [it, fresh] = groups.try_emplace(k[i], i, 0);
    ++it->second.second;
  }
  Json rows = Json::array();
  for (const auto& [degree, rep_count] : groups) {
    BigRat m1 = hypergeom_falling_moment(rep_count.first, 1, k, shape.t);
    BigRat m2 = hypergeom_falling_moment(rep_count.first, 2, k, shape.t);
    Json row;
    row["degree"] = degree;
    row["vertices"] = rep_count.second;
    row["E(X-1)_1"] = rational_json(m1);
    row["E(X-1)_2"] = rational_json(m2);
    rows.push_back(std::move(row));
    table << "degree " << degree << " (" << rep_count.second
          << " vertices): E(X-1)_1 = " << rational_str(m1)
          << ", E(X-1)_2 = " << rational_str(m2) << "\n";
  }
  j["moments"] = std::move(rows);

  BigRat l0 = lambda0_exact(k, r);
  BigRat el = expected_lambda_exact(k, r);
  ClosedFormExponent cf = expected_g_closed_form(k, r);
  j["lambda0"] = rational_json(l0);
  j["expected_lambda"] = rational_json(el);
  j["expected_g"] = Json{{"value", cf.value}, {"error_magnitude", cf.error_magnitude}};
  table << "lambda0: " << rational_str(l0) << "\n"
        << "E lambda(X): " << rational_str(el) << "\n"
        << "E g(X) closed form: " << fmt(cf.value) << " (error magnitude "
        << fmt(cf.error_magnitude, "%.6g") << ")\n";
  return {std::move(j), table.str()};
}

Report cmd_sample(const RunConfig& cfg) {
  std::int64_t r = require_r(cfg);
  if (cfg.samples < 1) throw ValidationError("sample count must be positive");

  Json j;
  j["kind"] = cfg.kind;
  j["seed"] = cfg.seed;
  Json arr = Json::array();
  std::ostringstream table;

  if (cfg.kind == "hypergraph") {
    DegreeSequence k = load_k(cfg);
    j["degrees"] = k.to_string();
    j["r"] = r;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      Rng rng = Rng::stream(cfg.seed, i);
      Hypergraph h = sample_simple_hypergraph(k, r, rng, cfg.max_rejects);
      arr.push_back(edges_json(h));
      table << h.format() << "\n";
    }
  } else if (cfg.kind == "hypertree") {
    std::int64_t n = require_n(cfg);
    UniformHypertreeSampler sampler(n, r, UniformHypertreeSampler::Path::kDirect,
                                    std::min<std::uint64_t>(cfg.budget, 2'000'000));
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      Rng rng = Rng::stream(cfg.seed, i);
      Hypergraph h = sampler.draw(rng);
      arr.push_back(edges_json(h));
      table << h.format() << "\n";
    }
    j["n"] = n;
    j["r"] = r;
  } else {
    throw ValidationError("unknown sample kind: " + cfg.kind);
  }
  j["samples"] = std::move(arr);
  return {std::move(j), table.str()};
}

Report cmd_compare(const RunConfig& cfg, std::ostream& err) {
  std::int64_t r = require_r(cfg);
  bool use_exact = cfg.exact;
  bool use_mc = cfg.mc;
  bool use_asym = cfg.asymptotic;
  if (!use_exact && !use_mc && !use_asym) {
    use_mc = true;
    use_asym = true;
  }

  std::vector<DegreeSequence> points;
  if (!cfg.grid_n.empty()) {
    if (cfg.k_regular < 1) throw ValidationError("--grid-n requires --k");
    for (std::int64_t n : cfg.grid_n)
      points.push_back(DegreeSequence::regular(n, cfg.k_regular));
  } else {
    points.push_back(load_k(cfg));
  }

  std::ostringstream csv;
  csv << "n,r,k_spec,method,log10_value,stderr_or_error_bound,regime_ok,seconds\n";
  Json rows = Json::array();

  for (const DegreeSequence& k : points) {
    // seconds appears only in the CSV: the JSON report stays byte-identical
    // across runs of the same config.
    auto emit = [&](const std::string& method, std::optional<double> log10_value,
                    std::optional<double> err_col, std::optional<bool> regime,
                    double seconds) {
      csv << k.n() << ',' << r << ",\"" << k.to_string() << "\"," << method << ','
          << (log10_value ? fmt(*log10_value) : "") << ','
          << (err_col ? fmt(*err_col, "%.6g") : "") << ','
          << (regime ? (*regime ? "true" : "false") : "") << ','
          << fmt(seconds, "%.3f") << "\n";
      Json row;
      row["n"] = k.n();
      row["r"] = r;
      row["k_spec"] = k.to_string();
      row["method"] = method;
      row["log10_value"] = log10_value ? Json(*log10_value) : Json(nullptr);
      row["stderr_or_error_bound"] = err_col ? Json(*err_col) : Json(nullptr);
      row["regime_ok"] = regime ? Json(*regime) : Json(nullptr);
      rows.push_back(std::move(row));
    };

    if (use_exact) {
      auto t0 = Clock::now();
      try {
        CensusResult res = exact_expected_spanning_hypertrees(k, r, cfg.budget, cfg.threads);
        std::optional<double> lg;
        if (res.expectation != 0) lg = log_bigrat(res.expectation) / M_LN10;
        emit("exact", lg, 0.0, std::nullopt, elapsed_since(t0));
      } catch (const BudgetError& e) {
        err << "compare: exact skipped for " << k.to_string() << ": " << e.what() << "\n";
        emit("exact", std::nullopt, std::nullopt, std::nullopt, elapsed_since(t0));
      }
    }
    if (use_mc) {
      auto t0 = Clock::now();
      try {
        McEstimate est = mc_expected_spanning_hypertrees(k, r, cfg.samples, cfg.seed,
                                                         cfg.max_rejects, cfg.threads);
        std::optional<double> lg;
        if (est.mean > 0) lg = std::log10(est.mean);
        emit("mc", lg, est.std_error, std::nullopt, elapsed_since(t0));
      } catch (const BudgetError& e) {
        err << "compare: mc skipped for " << k.to_string() << ": " << e.what() << "\n";
        emit("mc", std::nullopt, std::nullopt, std::nullopt, elapsed_since(t0));
      }
    }
    if (use_asym) {
      auto t0 = Clock::now();
      AsymptoticEstimate est = theorem1_estimate(k, r);
      std::optional<double> lg;
      if (!est.log_value.is_zero()) lg = est.log_value.log10();
      emit("asymptotic", lg, est.error_exponent_bound, est.regime_ok, elapsed_since(t0));
    }
  }
  return {std::move(rows), csv.str()};
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "table")
      throw ValidationError("unknown format: " + cfg.format);
    if (cfg.format == "csv" && cfg.subcommand != "compare")
      throw ValidationError("csv output is only defined for compare");
    if (cfg.threads < 1) throw ValidationError("--threads must be positive");

    Report rep;
    if (cfg.subcommand == "count-trees")
      rep = cmd_count_trees(cfg);
    else if (cfg.subcommand == "tree-degree-count")
      rep = cmd_tree_degree_count(cfg);
    else if (cfg.subcommand == "census")
      rep = cmd_census(cfg);
    else if (cfg.subcommand == "expected")
      rep = cmd_expected(cfg);
    else if (cfg.subcommand == "probability")
      rep = cmd_probability(cfg);
    else if (cfg.subcommand == "moments")
      rep = cmd_moments(cfg);
    else if (cfg.subcommand == "sample")
      rep = cmd_sample(cfg);
    else if (cfg.subcommand == "compare")
      rep = cmd_compare(cfg, err);
    else
      throw ValidationError("unknown subcommand: " + cfg.subcommand);

    if (cfg.format == "json")
      out << rep.json.dump(2) << "\n";
    else
      out << rep.table;
    return 0;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hypertree
