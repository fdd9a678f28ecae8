#include <omp.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ekrm/cli.hpp"
#include "ekrm/ekr.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/spectral.hpp"

namespace ekrm {

namespace {

const std::set<std::string> kChecks = {"ekr", "strict", "module", "certificate"};

template <class T>
void env_override(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v <= 0)
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" + raw + "'");
  field = static_cast<T>(v);
}

class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  void check(const char* stage) const {
    if (seconds_ > 0 && elapsed() > seconds_)
      throw BudgetExceeded("time limit of " + std::to_string(seconds_) + " s passed after " + stage);
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json budget_json(const Budget& b) {
  return {{"max_group_order", b.max_group_order},
          {"max_normal_search_order", b.max_normal_search_order},
          {"max_subgroup_lattice_order", b.max_subgroup_lattice_order},
          {"max_fixer_union", b.max_fixer_union},
          {"max_search_nodes", b.max_search_nodes},
          {"oracle_group_order", b.oracle_group_order},
          {"max_graph_vertices", b.max_graph_vertices}};
}

}  // namespace

Budget budget_from_env() {
  Budget b;
  env_override("EKRM_MAX_NODES", b.max_search_nodes);
  env_override("EKRM_MAX_GROUP_ORDER", b.max_group_order);
  env_override("EKRM_MAX_FIXER_UNION", b.max_fixer_union);
  env_override("EKRM_ORACLE_ORDER", b.oracle_group_order);
  env_override("EKRM_MAX_GRAPH_VERTICES", b.max_graph_vertices);
  return b;
}

JobSpec validate_job(JobSpec job) {
  if (job.group.empty()) throw std::invalid_argument("no group given");
  if (job.subgroup.empty()) throw ParseError("empty subgroup specification", 0);
  std::set<std::string> checks;
  for (const auto& c : job.checks) {
    if (c == "all") {
      checks.insert(kChecks.begin(), kChecks.end());
    } else if (kChecks.count(c)) {
      checks.insert(c);
    } else {
      throw std::invalid_argument("unknown check '" + c + "' (expected ekr, strict, module, certificate or all)");
    }
  }
  if (checks.empty()) throw std::invalid_argument("no checks requested");
  job.checks = std::move(checks);
  if (job.format != "json" && job.format != "table")
    throw std::invalid_argument("unknown format '" + job.format + "' (expected json or table)");
  if (job.threads < 0) throw std::invalid_argument("thread count must be non-negative");
  if (job.time_limit_seconds < 0) throw std::invalid_argument("time limit must be non-negative");
  const Budget& b = job.budget;
  if (!b.max_group_order || !b.max_normal_search_order || !b.max_subgroup_lattice_order || !b.max_fixer_union ||
      !b.max_search_nodes || !b.oracle_group_order || !b.max_graph_vertices)
    throw std::invalid_argument("budgets must be positive");
  const PermGroup g = parse_group(job.group);
  parse_subgroup(job.subgroup, g);
  return job;
}

nlohmann::json to_json(const JobSpec& job) {
  return {{"group", job.group},
          {"subgroup", job.subgroup},
          {"checks", std::vector<std::string>(job.checks.begin(), job.checks.end())},
          {"budget", budget_json(job.budget)},
          {"time_limit_seconds", job.time_limit_seconds},
          {"format", job.format},
          {"threads", job.threads}};
}

JobSpec job_from_json(const nlohmann::json& j) {
  static const std::set<std::string> keys = {"group",  "subgroup", "checks", "budget",
                                             "time_limit_seconds", "format", "threads"};
  if (!j.is_object()) throw std::invalid_argument("job must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw std::invalid_argument("unknown job key '" + k + "'");
  JobSpec job;
  job.budget = budget_from_env();
  job.group = j.value("group", "");
  job.subgroup = j.value("subgroup", "");
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) job.checks.insert(c.get<std::string>());
  else
    job.checks = {"all"};
  job.time_limit_seconds = j.value("time_limit_seconds", 0.0);
  job.format = j.value("format", "json");
  job.threads = j.value("threads", 0);
  if (j.contains("budget")) {
    const auto& b = j.at("budget");
    auto& o = job.budget;
    o.max_group_order = b.value("max_group_order", o.max_group_order);
    o.max_normal_search_order = b.value("max_normal_search_order", o.max_normal_search_order);
    o.max_subgroup_lattice_order = b.value("max_subgroup_lattice_order", o.max_subgroup_lattice_order);
    o.max_fixer_union = b.value("max_fixer_union", o.max_fixer_union);
    o.max_search_nodes = b.value("max_search_nodes", o.max_search_nodes);
    o.oracle_group_order = b.value("oracle_group_order", o.oracle_group_order);
    o.max_graph_vertices = b.value("max_graph_vertices", o.max_graph_vertices);
  }
  return job;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = body;
  out["timing"] = {{"seconds", seconds}, {"search_nodes", search_nodes}};
  return out;
}

Report run_job(const JobSpec& raw) {
  const JobSpec job = validate_job(raw);
  if (job.threads > 0) omp_set_num_threads(job.threads);
  const Deadline deadline(job.time_limit_seconds);
  Report rep;
  auto& body = rep.body;
  body["schema"] = "ekrm-report/1";
  body["input"] = to_json(job);
  body["status"] = "complete";
  body["error"] = nullptr;
  body["verdict"] = nullptr;
  body["certificate"] = nullptr;

  try {
    const PermGroup g = parse_group(job.group);
    const Subgroup h = parse_subgroup(job.subgroup, g);
    const CosetAction action = coset_action(g, h, job.budget);
    const CosetAction q = kernel_reduce(action);
    const RankInfo rank = rank_and_primitivity(q);
    nlohmann::json structure = {{"group_order", g.order()},
                                {"subgroup_order", h.order()},
                                {"kernel_order", action.kernel().order()},
                                {"degree", action.degree()},
                                {"rank", rank.rank},
                                {"primitive", rank.primitive},
                                {"two_transitive", rank.two_transitive},
                                {"suborbit_lengths", rank.suborbit_lengths}};
    body["structure"] = structure;
    deadline.check("structure");

    const Verdict v = ekr_verdicts(action, job.budget);
    deadline.check("enumeration");
    nlohmann::json vj = to_json(v);
    // Node counts depend on thread interleaving, so they sit with the timing.
    vj.erase("search_nodes");
    rep.search_nodes = v.search_nodes;
    nlohmann::json shortcuts = vj["shortcuts"];
    body["structure"]["shortcuts"] = shortcuts;
    nlohmann::json selected = {{"exhaustive", v.exhaustive}, {"method", v.method}, {"max_size", v.max_size}};
    if (job.checks.count("ekr")) selected["ekr"] = v.ekr;
    if (job.checks.count("strict")) selected["strict_ekr"] = v.strict_ekr;
    if (job.checks.count("module")) selected["ekr_module"] = v.ekr_module;
    body["summary"] = selected;
    body["verdict"] = vj;
    if (!v.exhaustive) {
      body["status"] = "incomplete";
      rep.exit_code = kExitBudget;
    }

    if (job.checks.count("certificate")) {
      const std::uint64_t target = v.max_size / v.kernel_order;
      nlohmann::json cj = {{"target", target}};
      try {
        const CertificateSearch cs = search_certificate(v.quotient, target, job.budget);
        static const char* names[] = {"found", "infeasible", "unverified"};
        cj["status"] = names[static_cast<int>(cs.status)];
        cj["reason"] = cs.reason;
        if (cs.check && cs.check->ok) cj["certificate"] = to_json(*cs.check->certificate, cs.f->table());
      } catch (const std::domain_error& e) {
        cj["status"] = "infeasible";
        cj["reason"] = e.what();
      }
      body["certificate"] = cj;
      deadline.check("certificate search");
    }
  } catch (const BudgetExceeded& e) {
    body["status"] = "budget_exceeded";
    body["error"] = e.what();
    rep.exit_code = kExitBudget;
  }
  rep.seconds = deadline.elapsed();
  return rep;
}

std::string render_table(const nlohmann::json& r) {
  std::ostringstream os;
  const auto& in = r.at("input");
  os << "group     " << in.at("group").get<std::string>() << "\n";
  os << "subgroup  " << in.at("subgroup").get<std::string>() << "\n";
  os << "status    " << r.at("status").get<std::string>() << "\n";
  if (!r.at("error").is_null()) os << "error     " << r.at("error").get<std::string>() << "\n";
  if (r.contains("structure")) {
    const auto& s = r.at("structure");
    os << "|G| = " << s.at("group_order") << ", |H| = " << s.at("subgroup_order") << ", |K| = " << s.at("kernel_order")
       << ", degree " << s.at("degree") << ", rank " << s.at("rank")
       << (s.at("primitive").get<bool>() ? ", primitive" : ", imprimitive")
       << (s.at("two_transitive").get<bool>() ? ", 2-transitive" : "") << "\n";
  }
  if (r.contains("summary")) {
    for (const auto& [k, v] : r.at("summary").items()) os << "  " << k << ": " << v.dump() << "\n";
    const auto& w = r.at("verdict").at("witnesses");
    for (const auto& x : w) {
      os << "  witness (" << x.at("kind").get<std::string>() << "):";
      if (x.contains("character")) os << " character of degree " << x.at("character").at("degree") << ", sum " << x.at("sum").get<std::string>();
      os << " on " << x.at("set").size() << " elements\n";
    }
  }
  if (!r.at("certificate").is_null()) {
    const auto& c = r.at("certificate");
    os << "certificate: " << c.at("status").get<std::string>();
    if (c.contains("certificate")) os << " " << c.at("certificate").dump();
    else if (!c.at("reason").get<std::string>().empty()) os << " (" << c.at("reason").get<std::string>() << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace ekrm
