// dcamb: build, verify, compare and export the doubled Cambrian framework of
// the cyclically oriented n-cycle.
//
// Exit status: 0 when every check passed, 1 when a check failed or the
// construction hit an invariant violation, 2 for usage errors, 3 when the
// oracle exceeded DCAMB_MAX_SEEDS.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dcamb/cluster_oracle.hpp"
#include "dcamb/doubled_framework.hpp"
#include "dcamb/errors.hpp"
#include "dcamb/fan_geometry.hpp"
#include "dcamb/framework_verify.hpp"
#include "dcamb/io.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr std::size_t kDefaultSamples = 2000;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kExhausted = 3 };

struct RunConfig {
  int n = 0;
  std::string out;
  std::string from;
  std::string format = "json";
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_seeds_from_env() {
  const char* raw = std::getenv("DCAMB_MAX_SEEDS");
  if (raw == nullptr || *raw == '\0') return 1'000'000;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("DCAMB_MAX_SEEDS must be a positive integer, got '") + raw + "'");
  }
}

void require_rank(const RunConfig& cfg) {
  if (cfg.n < 3) throw UsageError("--n must be at least 3");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << text;
}

int cmd_build(const RunConfig& cfg) {
  require_rank(cfg);
  const auto fw = dcamb::build_doubled(cfg.n);
  emit(cfg, dcamb::to_json(fw.graph).dump(2) + "\n");
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& v : fw.graph.vertices) ++counts[static_cast<int>(v.side)];
  (cfg.out.empty() ? std::cerr : std::cout)
      << "DCamb_" << cfg.n << ": " << fw.graph.vertices.size() << " vertices (" << counts[0] << " Omega-only, "
      << counts[1] << " (-Omega)-only, " << counts[2] << " glued), " << fw.graph.edges.size() << " edges, "
      << fw.graph.half_edges.size() << " half-edges\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  dcamb::LabeledQuasiGraph g;
  if (!cfg.from.empty()) {
    std::ifstream f(cfg.from);
    if (!f) throw UsageError("cannot read " + cfg.from);
    nlohmann::json doc;
    try {
      f >> doc;
      g = dcamb::graph_from_json(doc);
    } catch (const std::exception& e) {
      std::cout << "FAIL  Input: " << e.what() << "\n";
      return kCheckFailed;
    }
  } else {
    require_rank(cfg);
    g = dcamb::build(cfg.n);
  }

  dcamb::AxiomReport report = dcamb::verify_all(g);
  const auto simplicial = dcamb::check_simplicial(g);
  {
    dcamb::AxiomResult r{"Simplicial", simplicial.passed, std::nullopt, ""};
    if (!simplicial.passed) r.witness = dcamb::Witness{simplicial.witness, std::nullopt, std::nullopt, "label set is not a unimodular basis"};
    report.results.push_back(std::move(r));
  }
  if (simplicial.passed) {
    const auto fan = dcamb::check_fan(g, cfg.samples, cfg.seed);
    dcamb::AxiomResult facets{"Facet pairing", fan.facets_paired(), std::nullopt,
                              std::to_string(fan.facets_checked) + " facets"};
    if (!fan.facets_paired()) facets.witness = dcamb::Witness{std::nullopt, std::nullopt, std::nullopt, fan.facet_failures.front()};
    dcamb::AxiomResult cover{"Fan cover", fan.uncovered == 0 && fan.multiply_covered == 0, std::nullopt,
                             std::to_string(fan.samples) + " samples, seed " + std::to_string(cfg.seed)};
    if (!cover.passed) {
      cover.witness = dcamb::Witness{std::nullopt, std::nullopt, std::nullopt,
                                     std::to_string(fan.uncovered) + " uncovered, " +
                                         std::to_string(fan.multiply_covered) + " multiply covered"};
    }
    report.results.push_back(std::move(facets));
    report.results.push_back(std::move(cover));
  } else {
    report.results.push_back({"Facet pairing", false, dcamb::Witness{simplicial.witness, std::nullopt, std::nullopt, "skipped: cones are not simplicial"}, ""});
  }

  std::cout << report.to_text(g);
  if (!cfg.out.empty()) {
    RunConfig json_out = cfg;
    emit(json_out, dcamb::to_json(report, g).dump(2) + "\n");
  }
  std::cout << (report.passed() ? "ALL PASS" : "FAILED") << "\n";
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_compare(const RunConfig& cfg) {
  require_rank(cfg);
  const std::size_t cap = max_seeds_from_env();
  const auto g = dcamb::build(cfg.n);
  const auto oracle = dcamb::exchange_graph(cfg.n, cap);
  const auto rep = dcamb::compare(g, oracle);
  std::cout << rep.summary() << "\n";
  if (!cfg.out.empty()) emit(cfg, dcamb::to_json(oracle).dump(1) + "\n");
  return rep.isomorphic ? kOk : kCheckFailed;
}

int cmd_export(const RunConfig& cfg) {
  require_rank(cfg);
  if (cfg.format == "svg" && cfg.n != 3) throw UsageError("--format svg is only available for --n 3");
  const auto g = dcamb::build(cfg.n);
  if (cfg.format == "dot") {
    emit(cfg, dcamb::to_dot(g));
  } else if (cfg.format == "svg") {
    emit(cfg, dcamb::to_svg(g));
  } else {
    emit(cfg, dcamb::to_json(g).dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled Cambrian frameworks for the cyclically oriented n-cycle"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool n_required) {
    auto* opt = sub->add_option("--n", cfg.n, "rank (number of vertices of the cycle), at least 3");
    if (n_required) opt->required();
  };
  auto* build = app.add_subcommand("build", "construct DCamb_n and write it as JSON");
  add_common(build, true);
  build->add_option("--out", cfg.out, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check the framework axioms and the fan");
  add_common(verify, false);
  verify->add_option("--from", cfg.from, "verify a JSON document instead of building");
  verify->add_option("--out", cfg.out, "write the report as JSON");
  verify->add_option("--samples", cfg.samples, "random points for the fan check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed for the fan check");

  auto* compare = app.add_subcommand("compare", "compare against the mutation oracle");
  add_common(compare, true);
  compare->add_option("--out", cfg.out, "write the oracle seeds as JSON");

  auto* exp = app.add_subcommand("export", "write DOT, JSON or SVG");
  add_common(exp, true);
  exp->add_option("--out", cfg.out, "output file (default: stdout)");
  exp->add_option("--format", cfg.format, "dot, json or svg")->check(CLI::IsMember({"dot", "json", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*verify) {
      if (cfg.from.empty() && cfg.n == 0) throw UsageError("verify needs --n or --from");
      return cmd_verify(cfg);
    }
    if (*compare) return cmd_compare(cfg);
    return cmd_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const dcamb::ResourceExhausted& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
