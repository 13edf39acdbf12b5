// sunada: command-line front end.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "sunada/catalog.hpp"
#include "sunada/error.hpp"
#include "sunada/gassmann.hpp"
#include "sunada/graph.hpp"
#include "sunada/homwide.hpp"
#include "sunada/io.hpp"
#include "sunada/wreath.hpp"

using namespace sunada;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> ell;
  bool pintonello = false;
  bool solo = false;
  bool wreath = false;
  bool diff = false;
  std::size_t chi1 = 0, chi2 = 0;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t count = 10;
};

struct Outcome {
  json report;
  std::ostringstream summary;
  bool pass = true;
};

// Drops a leading verb such as "check" or "test" from the positional list.
std::vector<std::string> operands(const RunConfig& cfg, const char* verb, std::size_t want_min, std::size_t want_max) {
  std::vector<std::string> in = cfg.inputs;
  if (!in.empty() && in.front() == verb) in.erase(in.begin());
  if (in.size() < want_min || in.size() > want_max)
    throw Error(ErrorKind::Parse, cfg.subcommand + ": expected " + std::to_string(want_min) +
                                      (want_max > want_min ? "-" + std::to_string(want_max) : "") + " input file(s)");
  return in;
}

Triple load_triple(const std::string& path) {
  GroupSpec spec = parse_group_spec(read_file(path));
  return spec.triple(path);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void run_gassmann(const RunConfig& cfg, Outcome& out) {
  auto t = load_triple(operands(cfg, "check", 1, 1)[0]);
  const auto r = weak_conjugacy(*t.group, t.h1, t.h2);
  out.report = to_json(*t.group, r);
  out.report["group_order"] = t.group->order();
  out.report["subgroup_orders"] = {t.h1.order(), t.h2.order()};
  out.summary << "|G| = " << t.group->order() << ", |H1| = " << t.h1.order() << ", |H2| = " << t.h2.order() << "\n"
              << "weakly conjugate: " << yes_no(r.weakly_conjugate) << "\n"
              << "conjugate:        " << yes_no(r.conjugate) << "\n";
}

void run_isometry(const RunConfig& cfg, Outcome& out) {
  auto t = load_triple(operands(cfg, "test", 1, 1)[0]);
  IsometryOptions opts;
  opts.ell = cfg.ell;
  opts.pintonello = cfg.pintonello;
  const auto v = isometry_test(*t.group, t.h1, t.h2, opts);
  WreathContext ctx(*t.group, t.h1, t.h2, v.ell);
  out.report = to_json(ctx, v);
  out.summary << "ell = " << v.ell << (v.pintonello ? " (weak variant)" : "") << "\n"
              << "verdict: " << (v.equivalent ? "equivalent" : "not equivalent") << "\n"
              << "checks: " << v.checks_performed << " of budget " << v.budget << "\n";
}

void run_homwide(const RunConfig& cfg, Outcome& out) {
  const auto files = operands(cfg, "check", 2, 2);
  GroupSpec spec = parse_group_spec(read_file(files[0]));
  const GModule m = parse_gmodule(read_file(files[1]), *spec.group);
  const FiniteGroup& g = *spec.group;
  const bool coprime = m.ell() == 0 || g.order() % m.ell() != 0;
  out.report = {{"field", m.field_name()}, {"dim", m.dim()}, {"group_order", g.order()}};
  const auto regular = contains_regular(m);
  out.report["contains_regular"] = to_json(regular);
  out.report["homologically_wide"] =
      regular.status == SearchStatus::Unknown ? json(nullptr) : json(regular.status == SearchStatus::Found);
  if (regular.vector) out.report["cyclic_vector"] = to_json(*regular.vector);
  json star = json::object();
  for (const auto& [name, h] : spec.subgroups) {
    if (!coprime) {
      star[name] = {{"status", "skipped"}, {"reason", "ell divides |G|"}};
      continue;
    }
    auto r = condition_star(m, h);
    json j = to_json(r);
    j["condition_star"] = r.status == SearchStatus::Unknown ? json(nullptr) : json(r.status == SearchStatus::Found);
    if (regular.vector) {
      Vector pushed(m.dim(), 0);
      for (std::size_t x : h.members()) {
        auto hv = m.act(x, *regular.vector);
        for (std::size_t k = 0; k < m.dim(); ++k) pushed[k] += hv[k];
      }
      pushed = m.normalize(pushed);
      j["fixed_vector_witness"] = to_json(pushed);
      if (!is_star_witness(m, h, pushed)) out.pass = false;
    }
    star[name] = j;
  }
  out.report["condition_star"] = star;
  out.summary << "module over " << m.field_name() << " of dimension " << m.dim() << "\n"
              << "contains F[G]: " << to_string(regular.status) << "\n";
  for (auto it = star.begin(); it != star.end(); ++it)
    out.summary << "condition (*) for " << it.key() << ": " << it.value().value("status", std::string("?")) << "\n";
}

json wreath_section(const VoltageGraph& x, const Triple& t, const RunConfig& cfg, bool& pass, std::ostream& summary) {
  const FiniteGroup& g = *t.group;
  const std::uint64_t ell = cfg.ell.value_or(choose_ell(g.order()));
  IsometryOptions opts;
  opts.ell = ell;
  const auto verdict = isometry_test(g, t.h1, t.h2, opts);
  WreathContext ctx(g, t.h1, t.h2, ell);
  const auto hm = graph_homology_module(x, ell);
  const auto star = condition_star(*hm.module, t.h1);
  json out = {{"ell", ell}, {"homology_dimension", hm.module->dim()}, {"condition_star", to_json(star)}};
  if (star.status != SearchStatus::Found) {
    out["realized"] = false;
    summary << "wreath cover: no condition (*) witness\n";
    return out;
  }
  const auto cover = build_wreath_cover(ctx, x, *star.witness);
  out["realized"] = true;
  out["cover"] = to_json(cover);
  const bool checks = cover.connected && cover.free_base_action && cover.conjugation_matches && cover.monodromy_matches;
  const auto xi = solitary_character(ctx);
  json solos = json::array();
  bool spectral_equivalent = false;
  bool kernels = true;
  for (const auto& psi : wreath_linear_characters(ctx, 2)) {
    const auto c = cover_solo(cover, ctx, xi, psi);
    const bool iso = c.kernel[0][1] == 1 && c.kernel[1][1] == 1;
    spectral_equivalent = spectral_equivalent || (iso && c.spectra_equal);
    kernels = kernels && c.kernels_match;
    solos.push_back({{"a", psi.a},
                     {"chi_index", psi.chi_index},
                     {"kernels", {{c.kernel[0][0], c.kernel[0][1]}, {c.kernel[1][0], c.kernel[1][1]}}},
                     {"expected", {{c.expected[0][0], c.expected[0][1]}, {c.expected[1][0], c.expected[1][1]}}},
                     {"spectra_equal", c.spectra_equal}});
    if (iso) break;
  }
  out["solo"] = solos;
  out["group_level_equivalent"] = verdict.equivalent;
  out["spectral_equivalent"] = spectral_equivalent;
  out["agrees"] = spectral_equivalent == verdict.equivalent;
  pass = pass && checks && kernels && spectral_equivalent == verdict.equivalent;
  summary << "wreath cover: " << cover.graph.vertices << " vertices, deck checks " << (checks ? "ok" : "FAILED")
          << ", spectral verdict " << (spectral_equivalent ? "equivalent" : "not equivalent") << " vs group verdict "
          << (verdict.equivalent ? "equivalent" : "not equivalent") << "\n";
  return out;
}

void run_graph(const RunConfig& cfg, Outcome& out) {
  const auto files = operands(cfg, "bench", 1, 2);
  auto t = load_triple(files[0]);
  const FiniteGroup& g = *t.group;
  const VoltageGraph x = files.size() == 2 ? parse_voltage_graph(read_file(files[1]), g)
                                           : VoltageGraph::bouquet(g, g.generator_indices());
  const auto chars1 = linear_characters(t.h1.group()), chars2 = linear_characters(t.h2.group());
  if (cfg.chi1 >= chars1.size() || cfg.chi2 >= chars2.size()) throw Error(ErrorKind::Parse, "character index out of range");
  const auto r = verify_sunada_bench(x, t.h1, t.h2, chars1[cfg.chi1], chars2[cfg.chi2], kMaxOperatorSize, cfg.tolerance);
  out.report = to_json(r);
  if (!cfg.solo) out.report.erase("solo_slots");
  out.report["base"] = {{"vertices", x.vertices()}, {"edges", x.edges().size()}, {"cover_connected", x.cover_connected()}};
  out.pass = r.ok();
  out.summary << "covers: " << r.components[0] << " and " << r.components[1] << " component(s)\n"
              << "isospectral: "
              << (r.covers_isospectral ? yes_no(*r.covers_isospectral) : "not computed (size)") << "\n"
              << "induction and regular identities: " << yes_no(r.snt_ok && r.regular_ok) << "\n";
  if (cfg.solo) {
    for (const auto& s : r.slots)
      out.summary << "a" << s.i << s.j << ": kernel " << s.kernel << ", characters " << s.mackey << "\n";
    out.summary << "solo consistent: " << yes_no(r.solo_consistent) << "\n";
  }
  if (cfg.wreath) out.report["wreath"] = wreath_section(x, t, cfg, out.pass, out.summary);
}

void run_table1(const RunConfig& cfg, Outcome& out) {
  out.report = json::array();
  for (const auto& row : table1()) {
    out.report.push_back(to_json(row));
    out.summary << row.name << ": |G| " << row.group_order << ", |H| " << row.subgroup_order << ", ell " << row.ell
                << ", n " << row.dimension << ", budget " << row.budget;
    if (cfg.diff) {
      out.summary << "  [" << (row.matches ? "match" : "DIFF") << "]";
      if (!row.matches)
        out.summary << " expected " << row.expected_group_order << "/" << row.expected_subgroup_order << "/"
                    << row.expected_ell << "/" << row.expected_dimension << "/" << row.expected_budget;
      out.pass = out.pass && row.matches;
    }
    out.summary << "\n";
  }
}

// Invariant suite over the shipped examples plus seeded random triples.
void run_selftest(const RunConfig& cfg, Outcome& out) {
  json items = json::array();
  auto record = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    json j = {{"check", name}, {"pass", ok}};
    if (!error.empty()) j["error"] = error;
    items.push_back(j);
    out.summary << (ok ? "PASS " : "FAIL ") << name << (error.empty() ? "" : " (" + error + ")") << "\n";
    out.pass = out.pass && ok;
  };
  record("gassmann triple is weakly conjugate and not conjugate", [] {
    auto t = catalog::gassmann();
    auto r = weak_conjugacy(*t.group, t.h1, t.h2);
    return r.weakly_conjugate && !r.conjugate;
  });
  record("table rows match", [] {
    for (const auto& row : table1())
      if (!row.matches) return false;
    return true;
  });
  record("isometry verdicts on named pairs", [] {
    auto g = catalog::gassmann();
    auto s4 = catalog::s4_cyclic_klein();
    auto s3 = catalog::s3_transpositions();
    auto gu = catalog::guralnick(3);
    IsometryOptions weak;
    weak.pintonello = true;
    const auto vg = isometry_test(*g.group, g.h1, g.h2);
    return !vg.equivalent && vg.checks_performed == 56 && !isometry_test(*s4.group, s4.h1, s4.h2).equivalent &&
           isometry_test(*s3.group, s3.h1, s3.h2).equivalent && !isometry_test(*gu.group, gu.h1, gu.h2, weak).equivalent;
  });
  record("isometry verdicts on " + std::to_string(cfg.count) + " random triples", [&] {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.count; ++k) {
      auto t = catalog::random_triple(rng);
      if (isometry_test(*t.group, t.h1, t.h2).equivalent != are_conjugate_subgroups(*t.group, t.h1, t.h2).has_value())
        return false;
    }
    return true;
  });
  record("Seifert-Weber module", [] { return seifert_weber().ok(); });
  record("surface criteria", [] {
    for (std::size_t order : {2, 4, 8}) {
      auto g = catalog::cyclic(order);
      for (long long chi : {-8, -4, -2, 0, 2}) {
        if (chi % static_cast<long long>(order) != 0) continue;
        if ((surface_action_character(g, chi).verdict == Wideness::Wide) != (chi < 0)) return false;
      }
    }
    return true;
  });
  record("graph bench on the gassmann covers", [] {
    auto t = catalog::gassmann();
    auto x = VoltageGraph::bouquet(*t.group, t.group->generator_indices());
    auto r = verify_sunada_bench(x, t.h1, t.h2, LinearCharacter::trivial(t.h1.group()),
                                 LinearCharacter::trivial(t.h2.group()));
    return r.ok() && r.covers_isospectral.value_or(false);
  });
  record("wreath cover over S3 with ell = 5", [] {
    auto t = catalog::s3_transpositions();
    WreathContext ctx(*t.group, t.h1, t.h2, 5);
    auto x = VoltageGraph::bouquet(*t.group, t.group->generator_indices());
    auto star = condition_star(*graph_homology_module(x, 5).module, t.h1);
    if (!star.witness) return false;
    auto c = build_wreath_cover(ctx, x, *star.witness);
    return c.graph.vertices == 750 && c.connected && c.free_base_action && c.conjugation_matches && c.monodromy_matches;
  });
  out.report = {{"seed", cfg.seed}, {"checks", items}, {"pass", out.pass}};
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::Internal ? 1 : 2; }

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Finite group and graph computations for isospectral covers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", cfg.output, "Write the report to this file");
  app.add_option("--seed", cfg.seed, "Seed for randomized searches");
  app.add_option("--jobs", cfg.jobs, "Worker count (computations are deterministic)")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "Relative eigenvalue tolerance")->check(CLI::PositiveNumber);

  auto* gassmann = app.add_subcommand("gassmann", "Weak conjugacy report: gassmann check <groupfile>");
  gassmann->add_option("args", cfg.inputs)->required();
  auto* isometry = app.add_subcommand("isometry", "Wreath isometry test: isometry test <groupfile>");
  isometry->add_option("args", cfg.inputs)->required();
  isometry->add_option("--ell", cfg.ell, "Prime ell");
  isometry->add_flag("--pintonello", cfg.pintonello, "Weak-conjugacy variant with ell = 2");
  auto* homwide = app.add_subcommand("homwide", "Wideness of a module: homwide check <groupfile> <modulefile>");
  homwide->add_option("args", cfg.inputs)->required();
  auto* graph = app.add_subcommand("graph", "Spectral bench: graph bench <groupfile> [graphfile]");
  graph->add_option("args", cfg.inputs)->required();
  graph->add_flag("--solo", cfg.solo, "Report the four solo slots");
  graph->add_flag("--wreath", cfg.wreath, "Realize the wreath cover and compare on it");
  graph->add_option("--ell", cfg.ell, "Prime ell for --wreath");
  graph->add_option("--chi1", cfg.chi1, "Index of the character of H1");
  graph->add_option("--chi2", cfg.chi2, "Index of the character of H2");
  auto* table = app.add_subcommand("table1", "Budget table");
  table->add_flag("--diff", cfg.diff, "Compare against the reference rows");
  auto* selftest = app.add_subcommand("selftest", "Invariant suite");
  selftest->add_option("--count", cfg.count, "Random triples to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Outcome out;
  try {
    if (cfg.subcommand == "gassmann") run_gassmann(cfg, out);
    else if (cfg.subcommand == "isometry") run_isometry(cfg, out);
    else if (cfg.subcommand == "homwide") run_homwide(cfg, out);
    else if (cfg.subcommand == "graph") run_graph(cfg, out);
    else if (cfg.subcommand == "table1") run_table1(cfg, out);
    else run_selftest(cfg, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string body = cfg.format == "json" ? out.report.dump(2) + "\n" : out.summary.str();
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    file << body;
  }
  if (cfg.format == "json") std::cerr << out.summary.str();
  return out.pass ? 0 : 1;
}
