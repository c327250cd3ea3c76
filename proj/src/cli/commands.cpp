#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "twistbar/cli.hpp"
#include "twistbar/errors.hpp"
#include "twistbar/homology.hpp"
#include "twistbar/monoid_json.hpp"
#include "twistbar/operad.hpp"
#include "twistbar/simplicial.hpp"

namespace twistbar::cli {

using nlohmann::ordered_json;

namespace {

// Refusal of the feasibility guard.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonoidSource {
  std::string file;
  std::string builtin;

  void add_to(CLI::App* sub) {
    sub->add_option("monoid-file", file, "Monoid JSON file");
    sub->add_option("--builtin", builtin, "Built-in monoid")
        ->check(CLI::IsMember(builtin_names()));
  }

  ordered_json echo() const {
    ordered_json j;
    if (!builtin.empty())
      j["builtin"] = builtin;
    else
      j["file"] = file;
    return j;
  }

  MonoidTables tables() const {
    if (file.empty() == builtin.empty()) throw ParseError("give exactly one of <monoid-file> or --builtin");
    if (!builtin.empty()) return builtin_monoid(builtin).tables();
    return load_monoid_file(file);
  }

  MonoidPtr load() const {
    auto result = validate(tables());
    if (!result.ok()) throw ParseError("input is not a twisted monoid; run `validate` for the violations");
    return std::make_shared<const TwistedMonoid>(std::move(*result.monoid));
  }
};

struct Guard {
  std::uint64_t cap = kDefaultCap;
  bool force = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--cap", cap, "Per-level simplex cap of the feasibility guard")->capture_default_str();
    sub->add_flag("--force", force, "Run even if the feasibility guard refuses");
  }

  void check(const std::string& what, std::uint64_t estimate) const {
    if (!force && estimate > cap)
      throw Infeasible(what + " needs about " + std::to_string(estimate) + " simplices per level (cap " +
                       std::to_string(cap) + "); pass --force or raise --cap");
  }
};

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

ordered_json group_json(int degree, const AbelianGroup& g) {
  ordered_json j;
  j["degree"] = degree;
  j["free_rank"] = g.free_rank;
  j["torsion"] = g.torsion;
  j["group"] = g.to_string();
  return j;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["checks"] = c.checks;
  j["level_sizes"] = c.level_sizes;
  j["counterexample"] = c.failure ? ordered_json(*c.failure) : ordered_json(nullptr);
  return j;
}

std::string join_sizes(const std::vector<std::uint64_t>& sizes) {
  std::string s = "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? ", " : "") + std::to_string(sizes[i]);
  return s + ")";
}

void add_certificate_lines(Report& r, const Certificate& c) {
  r.lines.push_back(c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" + std::to_string(c.checks) + " checks)");
  if (!c.level_sizes.empty()) r.lines.push_back("level sizes " + join_sizes(c.level_sizes));
  if (c.failure) r.lines.push_back("counterexample: " + *c.failure);
}

// ---------------------------------------------------------------------------

Report cmd_validate(const MonoidSource& src) {
  Report r;
  r.command = "validate";
  r.inputs = src.echo();
  MonoidTables tables = src.tables();
  const auto names = tables.names;
  const auto result = validate(std::move(tables));
  r.results["elements"] = names.size();
  auto violations = ordered_json::array();
  for (const auto& v : result.violations) {
    ordered_json j;
    j["law"] = law_name(v.law);
    auto w = ordered_json::array();
    for (int id : v.witness) w.push_back(names[id]);
    j["witness"] = std::move(w);
    violations.push_back(std::move(j));
  }
  r.results["violations"] = std::move(violations);
  r.results["valid"] = result.ok();
  r.status = result.ok() ? "pass" : "fail";
  if (result.ok()) {
    const auto& m = *result.monoid;
    r.results["commutative"] = m.is_commutative();
    r.results["group"] = m.is_group();
    r.lines.push_back("twisted monoid with " + std::to_string(m.size()) + " elements" +
                      (m.is_commutative() ? ", commutative" : "") + (m.is_group() ? ", group" : ""));
  } else {
    r.lines.push_back(std::to_string(result.violations.size()) + " axiom violations");
    for (std::size_t i = 0; i < result.violations.size() && i < 20; ++i)
      r.lines.push_back(result.violations[i].describe(names));
    if (result.violations.size() > 20) r.lines.push_back("...");
  }
  return r;
}

Report cmd_homology(const MonoidSource& src, const std::string& construction, int max_degree, const Guard& guard) {
  Report r;
  r.command = "homology";
  r.inputs = src.echo();
  r.inputs["construction"] = construction;
  r.inputs["max_degree"] = max_degree;
  if (max_degree < 0) throw ParseError("--max-degree must be >= 0");
  const MonoidPtr monoid = src.load();
  const int truncation = max_degree + 1;
  const auto k = static_cast<std::uint64_t>(monoid->size());
  const auto fix = static_cast<std::uint64_t>(fixed_points(*monoid).size());

  SetPtr space;
  if (construction == "bar") {
    guard.check("bar construction", saturating_pow(k, truncation));
    space = bar_sigma(monoid, truncation);
  } else if (construction == "two-sided") {
    guard.check("two-sided bar", saturating_pow(k, truncation) * fix);
    space = two_sided_bar(monoid, truncation);
  } else {
    guard.check("fixed subcomplex", saturating_pow(k, truncation) * fix);
    space = fixed_subcomplex(edgewise(bar_sigma(monoid, 2 * truncation + 1), truncation));
  }

  const HomologyGroups h = homology_of(*space, max_degree);
  r.results["truncation"] = truncation;
  r.results["valid_through"] = h.valid_through;
  auto table = ordered_json::array();
  r.lines.push_back(construction + " construction, truncation " + std::to_string(truncation));
  for (int d = 0; d <= h.valid_through; ++d) {
    table.push_back(group_json(d, h.degrees[d]));
    r.lines.push_back("H_" + std::to_string(d) + " = " + h.degrees[d].to_string());
  }
  r.results["homology"] = std::move(table);
  if (construction != "bar") {
    const int components = pi0(*space);
    r.results["pi0"] = components;
    r.lines.push_back("pi_0 = " + std::to_string(components));
  }
  return r;
}

Report cmd_eta_check(const MonoidSource& src, int max_level, bool corrupt, const Guard& guard) {
  Report r;
  r.command = "eta-check";
  r.inputs = src.echo();
  r.inputs["max_level"] = max_level;
  r.inputs["corrupt"] = corrupt;
  if (max_level < 0) throw ParseError("--max-level must be >= 0");
  const MonoidPtr monoid = src.load();
  guard.check("eta check", saturating_pow(static_cast<std::uint64_t>(monoid->size()), max_level) *
                               static_cast<std::uint64_t>(fixed_points(*monoid).size()));
  const SimplicialMap f = corrupt ? corrupted_eta(monoid, max_level) : eta(monoid, max_level);
  const Certificate c = verify_simplicial_map(f);
  r.results["truncation"] = max_level;
  r.results["certificate"] = certificate_json(c);
  r.status = c.passed ? "pass" : "fail";
  add_certificate_lines(r, c);
  return r;
}

Report cmd_operad_check(int max_arity, int max_degree) {
  Report r;
  r.command = "operad-check";
  r.inputs["max_arity"] = max_arity;
  r.inputs["max_degree"] = max_degree;
  if (max_arity < 1 || max_degree < 1) throw ParseError("operad bounds must be >= 1");
  const OperadCertificate eq = check_equivariance(max_arity, max_degree);
  // associativity nests a second layer of blocks; its sweep is bounded separately
  const OperadCertificate assoc = check_associativity(std::min(max_arity, 2), std::min(max_degree, 2));
  auto to_json = [](const OperadCertificate& c) {
    ordered_json j;
    j["law"] = c.law;
    j["max_arity"] = c.max_arity;
    j["max_block_degree"] = c.max_block_degree;
    j["cases"] = c.cases;
    j["passed"] = c.passed;
    j["counterexample"] = c.counterexample ? ordered_json(*c.counterexample) : ordered_json(nullptr);
    return j;
  };
  r.results["equivariance"] = to_json(eq);
  r.results["associativity"] = to_json(assoc);
  for (const auto* c : {&eq, &assoc}) {
    r.lines.push_back(c->law + " (arity <= " + std::to_string(c->max_arity) + ", degree <= " +
                      std::to_string(c->max_block_degree) + "): " + (c->passed ? "pass" : "FAIL") + ", " +
                      std::to_string(c->cases) + " cases");
    if (c->counterexample) r.lines.push_back("counterexample: " + *c->counterexample);
  }
  r.status = eq.passed && assoc.passed ? "pass" : "fail";
  return r;
}

Report cmd_group_completion(const MonoidSource& src, int max_degree, const Guard& guard) {
  Report r;
  r.command = "group-completion";
  r.inputs = src.echo();
  r.inputs["max_degree"] = max_degree;
  if (max_degree < 1) throw ParseError("--max-degree must be >= 1");
  const MonoidPtr monoid = src.load();
  if (!monoid->is_commutative())
    throw UnsupportedInput("group completion comparison needs a commutative monoid");
  guard.check("bar construction", saturating_pow(static_cast<std::uint64_t>(monoid->size()), max_degree + 1));
  const HomologyGroups h = homology_of(*bar_sigma(monoid, max_degree + 1), max_degree);
  const AbelianGroup k = grothendieck_group(*monoid);
  const bool match = h.degrees[1] == k;
  r.results["truncation"] = max_degree + 1;
  r.results["h1_bar"] = group_json(1, h.degrees[1]);
  r.results["grothendieck_group"] = k.to_string();
  r.results["grothendieck_free_rank"] = k.free_rank;
  r.results["grothendieck_torsion"] = k.torsion;
  r.results["match"] = match;
  r.lines.push_back("H_1(B A) = " + h.degrees[1].to_string());
  r.lines.push_back("K(A)     = " + k.to_string());
  r.lines.push_back(match ? "match" : "MISMATCH");
  r.status = match ? "pass" : "fail";
  return r;
}

Report cmd_compare_deloop(const MonoidSource& src, int max_level, const Guard& guard) {
  Report r;
  r.command = "compare-deloop";
  r.inputs = src.echo();
  r.inputs["max_level"] = max_level;
  if (max_level < 0) throw ParseError("--max-level must be >= 0");
  const MonoidPtr monoid = src.load();
  if (!monoid->is_commutative()) throw UnsupportedInput("diagonal comparison needs a commutative monoid");
  guard.check("bisimplicial diagonal",
              saturating_pow(static_cast<std::uint64_t>(monoid->size()), max_level * max_level));
  const Certificate c = diagonal_compare(monoid, max_level);
  r.results["truncation"] = max_level;
  r.results["certificate"] = certificate_json(c);
  r.status = c.passed ? "pass" : "fail";
  add_certificate_lines(r, c);
  return r;
}

int exit_code_for(const Report& r) {
  return r.status == "pass" ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted bar construction engine for finite twisted monoids", "twistbar"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as a JSON document");

  MonoidSource src;
  Guard guard;

  auto* validate_cmd = app.add_subcommand("validate", "Check the twisted monoid axioms");
  src.add_to(validate_cmd);

  std::string construction = "bar";
  int max_degree = 1;
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a construction");
  src.add_to(homology_cmd);
  homology_cmd->add_option("--construction", construction)
      ->check(CLI::IsMember({"bar", "fixed", "two-sided"}))
      ->capture_default_str();
  homology_cmd->add_option("--max-degree", max_degree)->required();
  guard.add_to(homology_cmd);

  int max_level = 3;
  bool corrupt = false;
  auto* eta_cmd = app.add_subcommand("eta-check", "Certify the fixed-point isomorphism eta");
  src.add_to(eta_cmd);
  eta_cmd->add_option("--max-level", max_level)->required();
  eta_cmd->add_flag("--corrupt", corrupt, "Negative control: swap two level-1 images");
  guard.add_to(eta_cmd);

  int max_arity = 2;
  int max_block_degree = 2;
  auto* operad_cmd = app.add_subcommand("operad-check", "Certify equivariance of the permutation operad");
  operad_cmd->add_option("--max-arity", max_arity)->required();
  operad_cmd->add_option("--max-degree", max_block_degree)->required();

  auto* gc_cmd = app.add_subcommand("group-completion", "Compare H_1 of the bar construction with K(A)");
  src.add_to(gc_cmd);
  gc_cmd->add_option("--max-degree", max_degree)->capture_default_str();
  guard.add_to(gc_cmd);

  auto* deloop_cmd = app.add_subcommand("compare-deloop", "Compare the two bisimplicial diagonals");
  src.add_to(deloop_cmd);
  deloop_cmd->add_option("--max-level", max_level)->required();
  guard.add_to(deloop_cmd);

  SelftestOptions st;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the full property suite");
  selftest_cmd->add_option("--seed", st.seed)->capture_default_str();
  selftest_cmd->add_flag("--verbose", st.verbose, "Per-suite timing table");

  for (auto* sub : app.get_subcommands({}))
    sub->add_flag("--json", as_json, "Emit the report as a JSON document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  auto emit_error = [&](int code, const std::string& message) {
    if (as_json) {
      Report r;
      r.command = command;
      r.status = "error";
      r.results["exit_code"] = code;
      r.results["error"] = message;
      out << r.to_json().dump(2) << "\n";
    }
    err << "error: " << message << "\n";
    return code;
  };

  try {
    Report report;
    if (validate_cmd->parsed())
      report = cmd_validate(src);
    else if (homology_cmd->parsed())
      report = cmd_homology(src, construction, max_degree, guard);
    else if (eta_cmd->parsed())
      report = cmd_eta_check(src, max_level, corrupt, guard);
    else if (operad_cmd->parsed())
      report = cmd_operad_check(max_arity, max_block_degree);
    else if (gc_cmd->parsed())
      report = cmd_group_completion(src, max_degree, guard);
    else if (deloop_cmd->parsed())
      report = cmd_compare_deloop(src, max_level, guard);
    else
      report = selftest(st);
    out << (as_json ? report.to_json().dump(2) + "\n" : report.human());
    return exit_code_for(report);
  } catch (const ParseError& e) {
    return emit_error(kMalformedInput, e.what());
  } catch (const Infeasible& e) {
    return emit_error(kInfeasible, e.what());
  } catch (const UnsupportedInput& e) {
    return emit_error(kUnsupportedInput, e.what());
  } catch (const DomainError& e) {
    return emit_error(kMalformedInput, e.what());
  } catch (const TruncationError& e) {
    return emit_error(kMalformedInput, e.what());
  }
}

}  // namespace twistbar::cli
