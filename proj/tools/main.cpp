#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypertree/run.hpp"

namespace {

// Environment defaults; explicit flags override them.
void apply_env(hypertree::RunConfig& cfg) {
  if (const char* s = std::getenv("HYPERTREE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1) cfg.threads = static_cast<int>(v);
  }
  if (const char* s = std::getenv("HYPERTREE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v >= 1) cfg.budget = v;
  }
}

}  // namespace

int main(int argc, char** argv) {
  hypertree::RunConfig cfg;
  apply_env(cfg);

  CLI::App app{
      "Spanning hypertrees of uniform hypergraphs with given degrees: exact "
      "counts, censuses, Monte Carlo, and asymptotic estimates"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* c) {
    return c->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };
  auto add_degrees = [&](CLI::App* c) {
    c->add_option("--degrees", cfg.degrees,
                  "degree sequence: \"2,2,1,1\", \"2^9\", or @file");
    c->add_option("--k", cfg.k_regular, "regular degree (with --n)");
  };
  auto add_n = [&](CLI::App* c) { return c->add_option("--n", cfg.n, "vertex count"); };
  auto add_r = [&](CLI::App* c) {
    return c->add_option("--r", cfg.r, "edge size")->required();
  };
  auto add_mc_knobs = [&](CLI::App* c) {
    c->add_option("--samples", cfg.samples, "Monte Carlo sample count");
    c->add_option("--seed", cfg.seed, "random seed");
    c->add_option("--max-rejects", cfg.max_rejects,
                  "pairing rejections allowed per accepted sample");
  };
  auto add_work_knobs = [&](CLI::App* c) {
    c->add_option("--threads", cfg.threads, "worker threads");
    c->add_option("--budget", cfg.budget, "work budget (enumeration nodes)");
  };
  auto add_modes = [&](CLI::App* c) {
    c->add_flag("--exact", cfg.exact, "exact census expectation");
    c->add_flag("--mc", cfg.mc, "Monte Carlo estimate");
    c->add_flag("--asymptotic", cfg.asymptotic, "first-order asymptotic estimate");
  };

  auto* count = app.add_subcommand(
      "count-trees", "number of hypertrees on n labeled vertices with edge size r");
  add_n(count)->required();
  add_r(count);
  add_format(count);

  auto* tdc = app.add_subcommand("tree-degree-count",
                                 "number of hypertrees with an exact degree vector");
  add_n(tdc);
  add_r(tdc);
  tdc->add_option("--x", cfg.x, "hypertree degree vector, e.g. 2,1,1,1,1")
      ->required()
      ->delimiter(',');
  add_format(tdc);

  auto* census = app.add_subcommand(
      "census", "enumerate the degree class and average its spanning-hypertree counts");
  add_degrees(census);
  add_n(census);
  add_r(census);
  add_work_knobs(census);
  add_format(census);

  auto* expected =
      app.add_subcommand("expected", "expected spanning-hypertree count of the class");
  add_degrees(expected);
  add_n(expected);
  add_r(expected);
  add_modes(expected);
  add_mc_knobs(expected);
  add_work_knobs(expected);
  add_format(expected);

  auto* prob = app.add_subcommand(
      "probability", "probability that a random class member contains a fixed hypertree");
  add_degrees(prob);
  add_n(prob);
  add_r(prob);
  prob->add_option("--x", cfg.x, "hypertree degree vector")->required()->delimiter(',');
  add_work_knobs(prob);
  add_format(prob);

  auto* moments = app.add_subcommand(
      "moments", "hypergeometric degree-vector moments and exponent expectations");
  add_degrees(moments);
  add_n(moments);
  add_r(moments);
  add_format(moments);

  auto* sample = app.add_subcommand("sample", "draw hypergraphs or hypertrees");
  sample->add_option("--kind", cfg.kind, "what to sample")
      ->check(CLI::IsMember({"hypergraph", "hypertree"}));
  add_degrees(sample);
  add_n(sample);
  add_r(sample);
  auto* sample_count =
      sample->add_option("--samples", cfg.samples, "number of draws to emit");
  sample->add_option("--seed", cfg.seed, "random seed");
  sample->add_option("--max-rejects", cfg.max_rejects,
                     "pairing rejections allowed per accepted sample");
  add_work_knobs(sample);
  add_format(sample);
  sample->callback([&cfg, sample_count] {
    if (sample_count->count() == 0) cfg.samples = 1;
  });

  auto* compare = app.add_subcommand(
      "compare", "sweep exact/MC expectations against the asymptotic estimate");
  add_degrees(compare);
  add_n(compare);
  add_r(compare);
  compare->add_option("--grid-n", cfg.grid_n, "n values to sweep (regular degrees)")
      ->delimiter(',');
  add_modes(compare);
  add_mc_knobs(compare);
  add_work_knobs(compare);
  auto* compare_format = add_format(compare);
  compare->callback([&cfg, compare_format] {
    if (compare_format->count() == 0) cfg.format = "csv";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    return hypertree::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
