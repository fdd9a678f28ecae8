#include <omp.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ekrm/cli.hpp"
#include "ekrm/ekr.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/peisert.hpp"
#include "ekrm/spectral.hpp"

namespace ekrm {

namespace {

struct BudgetFlags {
  std::uint64_t max_nodes = 0;
  std::size_t oracle_order = 0;
  std::size_t max_group_order = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Branch-and-bound node limit (default from EKRM_MAX_NODES)");
    cmd->add_option("--oracle-order", oracle_order, "Largest group for exact span and dense oracles");
    cmd->add_option("--max-group-order", max_group_order, "Largest group whose elements are enumerated");
  }
  Budget apply(Budget b) const {
    if (max_nodes) b.max_search_nodes = max_nodes;
    if (oracle_order) b.oracle_group_order = oracle_order;
    if (max_group_order) b.max_group_order = max_group_order;
    return b;
  }
};

// "g^0,g^3" or "0,3".
std::vector<std::uint32_t> parse_reps(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = item;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.rfind("g^", 0) == 0) t = t.substr(2);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad representative '" + item + "' (expected g^j)");
    out.push_back(static_cast<std::uint32_t>(std::stoul(t)));
  }
  return out;
}

// "(1,2)(3,4)=1; (1,2,3)=2"
std::vector<std::pair<Permutation, Rational>> parse_weights(const std::string& text, std::size_t degree) {
  std::vector<std::pair<Permutation, Rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("weight '" + item + "' lacks '='");
    const auto perms = parse_permutations(item.substr(0, eq), degree);
    if (perms.size() != 1) throw std::invalid_argument("weight '" + item + "' must name one class representative");
    out.emplace_back(perms.front(), parse_rational(item.substr(eq + 1)));
  }
  return out;
}

void emit(std::ostream& out, const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ekrtool: EKR, strict-EKR and EKR-module checks for transitive group actions"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write JSON here instead of stdout");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Verdicts for G acting on the cosets of H");
  JobSpec job;
  std::vector<std::string> checks;
  std::string config;
  BudgetFlags analyze_budget;
  analyze->add_option("--group", job.group, "Named group or generators");
  analyze->add_option("--subgroup", job.subgroup, "Generators, stab:k, trivial or whole");
  analyze->add_option("--check", checks, "ekr, strict, module, certificate or all")->delimiter(',');
  analyze->add_option("--format", job.format, "json or table");
  analyze->add_option("--threads", job.threads, "OpenMP threads (0: default)");
  analyze->add_option("--time-limit", job.time_limit_seconds, "Seconds, checked between stages");
  analyze->add_option("--config", config, "JSON job file; flags given on the command line win");
  analyze_budget.add(analyze);

  // certify
  auto* certify = app.add_subcommand("certify", "Check or search for a spectral certificate");
  std::string cg, ch, weights, set_spec;
  std::uint64_t target = 0;
  BudgetFlags certify_budget;
  certify->add_option("--group", cg, "Named group or generators")->required();
  certify->add_option("--subgroup", ch, "Point stabilizer")->required();
  certify->add_option("--weights", weights, "Class weights, e.g. \"(1,2)(3,4)=1;(1,2,3)=2\"; omit to search");
  certify->add_option("--set", set_spec, "Intersecting subgroup to certify against (default H)");
  certify->add_option("--target", target, "Target size for the search (default |H|)");
  certify_budget.add(certify);

  // chartab
  auto* chartab = app.add_subcommand("chartab", "Exact character table");
  std::string tg, tformat = "json";
  chartab->add_option("--group", tg, "Named group or generators")->required();
  chartab->add_option("--format", tformat, "json or table");

  // peisert
  auto* peis = app.add_subcommand("peisert", "Peisert-type graph checks");
  std::uint32_t q = 0, m = 0;
  std::string reps, pcheck = "all";
  peis->add_option("--q", q, "Odd prime power")->required();
  peis->add_option("--m", m, "Number of cosets, 1..q+1")->required();
  peis->add_option("--reps", reps, "Coset representatives g^j, comma separated");
  peis->add_option("--check", pcheck, "spectrum, cliques or all");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Regenerate the worked examples");
  std::string suite;
  bool inject = false;
  repro->add_option("suite", suite, "Suite name (paper)")->required();
  repro->add_flag("--inject-failure", inject, "Append a fixture with a wrong expectation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      JobSpec spec;
      if (!config.empty()) {
        std::ifstream f(config);
        if (!f) throw std::invalid_argument("cannot read " + config);
        spec = job_from_json(nlohmann::json::parse(f));
      } else {
        spec.budget = budget_from_env();
        spec.checks = {"all"};
      }
      if (!job.group.empty()) spec.group = job.group;
      if (analyze->count("--subgroup")) spec.subgroup = job.subgroup;
      if (!checks.empty()) spec.checks = {checks.begin(), checks.end()};
      if (analyze->count("--format")) spec.format = job.format;
      if (analyze->count("--threads")) spec.threads = job.threads;
      if (analyze->count("--time-limit")) spec.time_limit_seconds = job.time_limit_seconds;
      spec.budget = analyze_budget.apply(spec.budget);
      const Report rep = run_job(spec);
      if (spec.format == "table")
        out << render_table(rep.to_json());
      else
        emit(out, rep.to_json(), output);
      return rep.exit_code;
    }
    if (*certify) {
      const Budget budget = certify_budget.apply(budget_from_env());
      const PermGroup g = parse_group(cg);
      const CosetAction full = coset_action(g, parse_subgroup(ch, g), budget);
      // Faithful actions keep G on its own points so weights and output read naturally.
      const CosetAction act = full.faithful() ? full : kernel_reduce(full);
      nlohmann::json j;
      if (!weights.empty()) {
        if (!full.faithful()) throw std::invalid_argument("--weights needs a faithful action (H core-free)");
        auto table = std::make_shared<const CharacterTable>(character_table(act.group(), budget));
        const auto f = class_function_from(act, table, parse_weights(weights, g.degree()));
        std::vector<Permutation> s = set_spec.empty() ? act.stabilizer().group.elements(budget.max_group_order)
                                                      : parse_subgroup(set_spec, g).group.elements(budget.max_group_order);
        const auto check = verify_certificate(f, s);
        j = {{"spectrum", to_json(check.spectrum)}, {"verified", check.ok}, {"reason", check.reason}};
        if (check.ok) j["certificate"] = to_json(*check.certificate, *table);
        if (check.witness) j["witness_character"] = *check.witness;
      } else {
        const std::uint64_t t = target ? target : act.stabilizer().order();
        const auto cs = search_certificate(act, t, budget);
        static const char* names[] = {"found", "infeasible", "unverified"};
        j = {{"target", t}, {"status", names[static_cast<int>(cs.status)]}, {"reason", cs.reason},
             {"margin", to_string(cs.margin)}, {"pivots", cs.pivots}};
        if (cs.check && cs.check->ok) j["certificate"] = to_json(*cs.check->certificate, cs.f->table());
      }
      emit(out, j, output);
      return kExitOk;
    }
    if (*chartab) {
      const auto t = character_table(parse_group(tg), budget_from_env());
      if (tformat == "table") {
        const auto& cls = *t.classes;
        for (std::size_t c = 0; c < cls.count(); ++c)
          out << "class " << c << "  size " << cls.sizes[c] << "  order " << cls.element_orders[c] << "  "
              << cls.representatives[c].to_cycle_string() << "\n";
        for (std::size_t i = 0; i < t.size(); ++i) {
          out << "chi" << i;
          for (const auto& v : t.rows[i]) out << "\t" << v.preview();
          out << "\n";
        }
      } else {
        emit(out, to_json(t), output);
      }
      return kExitOk;
    }
    if (*peis) {
      if (pcheck != "all" && pcheck != "spectrum" && pcheck != "cliques")
        throw std::invalid_argument("unknown check '" + pcheck + "' (expected spectrum, cliques or all)");
      const Budget budget = budget_from_env();
      const PeisertGraph g = build_peisert(q, m, reps.empty() ? std::vector<std::uint32_t>{} : parse_reps(reps), budget);
      const auto spec = spectrum(g);
      CliqueReport cl;
      SpanReport span;
      if (pcheck != "spectrum") {
        cl = max_cliques(g, budget);
        span = ekr_module_check(g, cl);
      }
      nlohmann::json j = to_json(g, spec, cl, span);
      if (pcheck == "spectrum") {
        for (const char* k : {"max_clique_size", "num_max_cliques", "num_canonical_cliques", "eigenvector_property",
                              "span_rank", "ekr_module"})
          j.erase(k);
      }
      emit(out, j, output);
      return kExitOk;
    }
    if (*repro) {
      const auto results = reproduce(suite, inject);
      bool all = true;
      for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n     expected: " << r.expected
            << "\n     computed: " << r.computed << "\n";
        all = all && r.pass;
      }
      out << (all ? "all fixtures pass" : "some fixtures FAILED") << "\n";
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const BudgetExceeded& e) {
    err << "ekrtool: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "ekrtool: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ekrtool: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ekrm
