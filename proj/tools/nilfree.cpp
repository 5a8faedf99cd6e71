// nilfree command line: decomposition tables, invariant series and inclusion checks.
#include "nilfree/inclusions.hpp"
#include "nilfree/invariants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace nilfree;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  int n = 2;
  int p = 2;
  int max_degree = 6;
  std::string group;
  std::uint64_t seed = 20240601;
  std::size_t column_cap = EngineLimits{}.column_cap;
  std::string format = "json";
  // check-inclusions
  std::string statement;
  std::vector<int> m;
  std::size_t samples = 300;
  bool search = false;
  int target = 0;
  int max_vars = 6;

  EngineLimits limits() const {
    EngineLimits l;
    l.column_cap = column_cap;
    return l;
  }
  GroupSpec group_spec() const {
    if (group.empty()) throw std::invalid_argument("--group is required");
    return GroupSpec(parse_family(group), n);
  }
};

struct Output {
  Json json;
  std::vector<std::vector<std::string>> csv;  // first row is the header
  std::vector<std::string> text;
  int status = 0;
};

Json lambda_json(const Partition& lam) { return lam.parts; }

Output cmd_decompose(const RunConfig& cfg) {
  Output out;
  out.csv.push_back({"module", "degree", "lambda", "m"});
  Json degrees = Json::array();
  std::vector<WeightTable> fs;
  std::optional<int> skipped_from;
  for (int d = 0; d <= cfg.max_degree; ++d) {
    try {
      fs.push_back(quotient_weight_table(cfg.n, cfg.p, d, cfg.limits()));
    } catch (const Infeasible&) {
      skipped_from = d;
      break;
    }
  }
  const auto bs = divide_by_sv(fs);
  Json violations = Json::array();
  for (std::size_t d = 0; d < fs.size(); ++d) {
    Json entry;
    entry["degree"] = d;
    for (const auto& [label, table] : {std::pair{"F", fs[d]}, std::pair{"B", bs[d]}}) {
      const SchurMultiplicities sm = schur_decompose(table);
      Json rows = Json::array();
      for (const auto& [lam, k] : sm.mult) {
        rows.push_back(Json{{"lambda", lambda_json(lam)}, {"m", k}});
        out.csv.push_back({label, std::to_string(d), lam.str(), std::to_string(k)});
        out.text.push_back(std::string(label) + " d=" + std::to_string(d) + " " + lam.str() + " x" + std::to_string(k));
        const int row = std::string(label) == "B" ? 0 : 1;
        if (row < lam.length() && lam.parts[row] > cfg.p - 1)
          violations.push_back(Json{{"module", label}, {"degree", d}, {"lambda", lambda_json(lam)}});
      }
      entry[label] = rows;
    }
    degrees.push_back(entry);
  }
  out.json["n"] = cfg.n;
  out.json["p"] = cfg.p;
  out.json["degrees"] = degrees;
  out.json["violations"] = violations;
  out.json["skipped_from"] = skipped_from ? Json(*skipped_from) : Json(nullptr);
  if (!violations.empty()) {
    out.status = 1;
    out.text.push_back("VIOLATION: " + violations.dump());
  }
  return out;
}

Output cmd_hilbert(const RunConfig& cfg) {
  Output out;
  const GroupSpec g = cfg.group_spec();
  const HilbertSeries h = invariant_hilbert(g, cfg.p, cfg.max_degree, cfg.limits());
  const FitReport fit = fit_rational_form(h);
  out.json = to_json(h, fit);
  const bool window_ok = h.truncation.max_degree >= fit.bound + 2;
  out.json["window_ok"] = window_ok;
  if (window_ok && !fit.deg_bound_ok) out.status = 1;
  out.csv.push_back({"degree", "coefficient"});
  for (std::size_t d = 0; d < h.truncation.coefficients.size(); ++d)
    out.csv.push_back({std::to_string(d), std::to_string(h.truncation.coefficients[d])});
  std::ostringstream os;
  os << g.name() << " p=" << cfg.p << " coeffs";
  for (auto c : h.truncation.coefficients) os << ' ' << c;
  os << " | numerator";
  for (auto c : fit.numerator) os << ' ' << c;
  os << " / (" << fit.denominator << ") degree " << fit.degree << " bound " << fit.bound
     << (fit.deg_bound_ok ? " ok" : window_ok ? " VIOLATION" : " window too small");
  out.text.push_back(os.str());
  return out;
}

Output cmd_beta(const RunConfig& cfg) {
  Output out;
  const GroupSpec g = cfg.group_spec();
  const BetaReport b = beta_upper(g, cfg.p, cfg.max_degree, cfg.limits());
  out.json["group"] = family_name(g.family);
  out.json["n"] = g.n;
  out.json["p"] = cfg.p;
  const Json report = to_json(b);
  for (const auto& [k, v] : report.items()) out.json[k] = v;
  if (b.conclusive && b.beta > b.bound) out.status = 1;
  out.csv.push_back({"degree", "new_generators"});
  for (std::size_t d = 0; d < b.new_generators.size(); ++d)
    out.csv.push_back({std::to_string(d), std::to_string(b.new_generators[d])});
  out.text.push_back(g.name() + " p=" + std::to_string(cfg.p) + " beta=" + std::to_string(b.beta) +
                     " window=" + std::to_string(b.window) + " bound=" + std::to_string(b.bound) +
                     (b.conclusive ? " conclusive" : " inconclusive"));
  return out;
}

Output cmd_check_bounds(const RunConfig& cfg) {
  Output out = cmd_decompose(cfg);
  std::vector<WeightTable> fs;
  for (int d = 0; d <= cfg.max_degree; ++d) {
    try {
      fs.push_back(quotient_weight_table(cfg.n, cfg.p, d, cfg.limits()));
    } catch (const Infeasible&) {
      break;
    }
  }
  const auto bs = divide_by_sv(fs);
  std::vector<SchurMultiplicities> bm;
  int max_b1 = 0;
  for (const auto& b : bs) {
    bm.push_back(schur_decompose(b));
    for (const auto& [lam, k] : bm.back().mult) max_b1 = std::max(max_b1, lam.length() ? lam.parts[0] : 0);
  }
  const auto back = pieri_tensor(bm, static_cast<int>(fs.size()) - 1, cfg.n);
  bool round_trip = true;
  for (std::size_t d = 0; d < fs.size(); ++d) round_trip = round_trip && back[d] == schur_decompose(fs[d]);
  Json j;
  j["n"] = cfg.n;
  j["p"] = cfg.p;
  j["max_degree"] = static_cast<int>(fs.size()) - 1;
  j["row_bounds_ok"] = out.json["violations"].empty();
  j["max_lambda1_B"] = max_b1;
  j["round_trip_ok"] = round_trip;
  j["violations"] = out.json["violations"];
  j["skipped_from"] = out.json["skipped_from"];
  out.json = j;
  if (!round_trip) out.status = 1;
  out.csv = {{"check", "value"},
             {"row_bounds_ok", j["row_bounds_ok"].dump()},
             {"max_lambda1_B", std::to_string(max_b1)},
             {"round_trip_ok", round_trip ? "true" : "false"}};
  out.text = {"row bounds " + std::string(j["row_bounds_ok"] ? "ok" : "VIOLATED") + ", max lambda1 in B = " +
              std::to_string(max_b1) + ", round trip " + (round_trip ? "ok" : "FAILED")};
  return out;
}

Output cmd_check_inclusions(const RunConfig& cfg) {
  Output out;
  if (cfg.search) {
    if (cfg.m.size() != 2) throw std::invalid_argument("--search needs --m M1,M2");
    NonInclusionSearch s;
    s.m1 = cfg.m[0];
    s.m2 = cfg.m[1];
    s.target = cfg.target ? cfg.target : s.m1 + s.m2 - 1;
    s.max_vars = cfg.max_vars;
    s.limits = cfg.limits();
    const auto r = search_non_inclusion(s);
    out.json = r.to_json();
    out.csv = {{"found", "witness", "attempted", "skipped"},
               {r.found ? "true" : "false", r.witness, std::to_string(r.attempted.size()),
                std::to_string(r.skipped.size())}};
    out.text = {std::string(r.found ? "witness " + r.witness : "no witness") + " after " +
                std::to_string(r.attempted.size()) + " weights, " + std::to_string(r.skipped.size()) + " skipped"};
    return out;
  }
  InclusionCase c;
  c.statement = cfg.statement;
  c.m = cfg.m;
  c.n = cfg.n;
  c.max_degree = cfg.max_degree;
  c.seed = cfg.seed;
  c.samples = cfg.samples;
  c.limits = cfg.limits();
  const InclusionReport rep = verify_inclusion(c);
  out.json = rep.to_json();
  if (!rep.passed()) out.status = 1;
  out.csv = {{"statement", "target", "checked", "failures", "skipped"},
             {rep.statement, std::to_string(rep.target), std::to_string(rep.checked),
              std::to_string(rep.failures.size()), std::to_string(rep.skipped.size())}};
  out.text = {rep.statement + " target I_" + std::to_string(rep.target) + ": " + std::to_string(rep.checked) +
              " checked, " + std::to_string(rep.failures.size()) + " failures" +
              (rep.exhaustive ? " (exhaustive)" : " (sampled)")};
  for (const auto& f : rep.failures) out.text.push_back("FAIL " + f);
  return out;
}

Output cmd_invariant_basis(const RunConfig& cfg) {
  Output out;
  const GroupSpec g = cfg.group_spec();
  QuotientAlgebra q(cfg.n, cfg.p, cfg.limits());
  Json degrees = Json::array();
  out.csv.push_back({"degree", "index", "representative"});
  std::optional<int> skipped_from;
  for (int d = 0; d <= cfg.max_degree; ++d) {
    std::vector<SparseVector> basis;
    try {
      basis = lie_invariant_basis(g, q, d);
    } catch (const Infeasible&) {
      skipped_from = d;
      break;
    }
    Json reps = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::string s = q.lift(basis[i], d).str();
      reps.push_back(s);
      out.csv.push_back({std::to_string(d), std::to_string(i), s});
      out.text.push_back("d=" + std::to_string(d) + " #" + std::to_string(i) + ": " + s);
    }
    degrees.push_back(Json{{"degree", d}, {"dim", basis.size()}, {"basis", reps}});
  }
  out.json["group"] = family_name(g.family);
  out.json["n"] = g.n;
  out.json["p"] = cfg.p;
  out.json["degrees"] = degrees;
  out.json["skipped_from"] = skipped_from ? Json(*skipped_from) : Json(nullptr);
  return out;
}

Output cmd_oracle_compare(const RunConfig& cfg) {
  Output out;
  const GroupSpec g = cfg.group_spec();
  const bool connected = g.family == Family::SL || g.family == Family::SO || g.family == Family::Sp;
  Json disagreements = Json::array();
  std::size_t partitions_checked = 0;
  if (connected)
    for (int d = 0; d <= cfg.max_degree; ++d)
      for (const Partition& lam : partitions(d, g.n)) {
        ++partitions_checked;
        const int rule = trivial_multiplicity(g, lam);
        const Integer ct = weyl_ct(g, lam);
        if (Integer(rule) != ct)
          disagreements.push_back(Json{{"oracle", "weyl_ct"}, {"lambda", lambda_json(lam)}, {"rule", rule},
                                       {"other", to_string(ct)}});
      }
  QuotientAlgebra q(cfg.n, cfg.p, cfg.limits());
  std::size_t degrees_checked = 0;
  for (int d = 0; d <= cfg.max_degree; ++d) {
    try {
      const auto sm = quotient_multiplicities(g.n, cfg.p, d, cfg.limits());
      std::int64_t rule = 0;
      for (const auto& [lam, k] : sm.mult) rule += k * trivial_multiplicity(g, lam);
      const std::int64_t kernel = static_cast<std::int64_t>(lie_invariant_basis(g, q, d).size());
      ++degrees_checked;
      if (rule != kernel)
        disagreements.push_back(Json{{"oracle", "lie_kernel"}, {"degree", d}, {"rule", rule}, {"other", kernel}});
    } catch (const Infeasible&) {
      break;
    }
  }
  out.json["group"] = family_name(g.family);
  out.json["n"] = g.n;
  out.json["p"] = cfg.p;
  out.json["partitions_checked"] = partitions_checked;
  out.json["degrees_checked"] = degrees_checked;
  out.json["disagreements"] = disagreements;
  if (!disagreements.empty()) out.status = 1;
  out.csv = {{"partitions_checked", "degrees_checked", "disagreements"},
             {std::to_string(partitions_checked), std::to_string(degrees_checked),
              std::to_string(disagreements.size())}};
  out.text = {g.name() + " p=" + std::to_string(cfg.p) + ": " + std::to_string(partitions_checked) +
              " partitions, " + std::to_string(degrees_checked) + " degrees, " +
              std::to_string(disagreements.size()) + " disagreements"};
  return out;
}

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    Json j;
    j["schema"] = 1;
    for (const auto& [k, v] : out.json.items()) j[k] = v;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (const auto& row : out.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const bool quote = row[i].find_first_of(",\"") != std::string::npos;
        std::string cell = row[i];
        if (quote) {
          std::string esc;
          for (char c : cell) esc += c == '"' ? std::string("\"\"") : std::string(1, c);
          cell = '"' + esc + '"';
        }
        std::cout << (i ? "," : "") << cell;
      }
      std::cout << '\n';
    }
  } else {
    for (const auto& line : out.text) std::cout << line << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-nilpotent quotients of free associative algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of generators")->check(CLI::Range(1, 16));
    sub->add_option("--p", cfg.p, "nilpotency class")->check(CLI::Range(1, 64));
    sub->add_option("--max-degree", cfg.max_degree, "largest degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--group", cfg.group, "sl|o|so|sp|ut")
        ->check(CLI::IsMember({"sl", "o", "so", "sp", "ut"}, CLI::ignore_case));
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--column-cap", cfg.column_cap, "largest weight space handled")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  std::vector<std::pair<CLI::App*, Output (*)(const RunConfig&)>> commands;
  auto add = [&](const char* name, const char* help, Output (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("decompose", "Schur multiplicities of F_n(N_p) and of its S(V)-quotient", cmd_decompose);
  add("hilbert", "invariant Hilbert series and its rational form", cmd_hilbert);
  add("beta", "generating degree of the invariant algebra", cmd_beta);
  add("check-bounds", "row bounds and the S(V) tensor round trip", cmd_check_bounds);
  CLI::App* inc = add("check-inclusions", "membership checks for commutator-ideal inclusions", cmd_check_inclusions);
  inc->add_option("--statement", cfg.statement, "statement name")->check(CLI::IsMember(inclusion_statements()));
  inc->add_option("--m", cfg.m, "ideal indices, comma separated")->delimiter(',');
  inc->add_option("--samples", cfg.samples, "random instances when not exhaustive");
  inc->add_flag("--search", cfg.search, "search for a product outside I_target instead");
  inc->add_option("--target", cfg.target, "ideal index for --search (default m1+m2-1)");
  inc->add_option("--max-vars", cfg.max_vars, "largest number of variables for --search");
  add("invariant-basis", "coset representatives of the invariants", cmd_invariant_basis);
  add("oracle-compare", "branching rule against constant terms and Lie kernels", cmd_oracle_compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    if (sub == inc && !cfg.search && cfg.statement.empty()) {
      std::cerr << "check-inclusions needs --statement or --search\n";
      return 2;
    }
    try {
      const Output out = fn(cfg);
      emit(out, cfg.format);
      return out.status;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}
