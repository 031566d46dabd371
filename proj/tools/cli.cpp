#include "cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/genfunc.hpp"
#include "quasichar/oracle.hpp"
#include "quasichar/quasipoly.hpp"
#include "quasichar/serialization.hpp"
#include "quasichar/verify.hpp"

namespace quasichar::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string family;
  std::string input;
  std::string via = "subsets";
  std::string sweep = "lattice";
  bool json = false;
  std::uint64_t budget_subsets = std::uint64_t{1} << 30;
  std::uint64_t budget_oracle = 1'000'000'000;
  unsigned threads = 0;
  bool dedup = false;
  std::size_t series_terms = 20;
  std::vector<std::uint64_t> q_values;
  std::uint64_t q_max = 0;
  std::vector<std::string> suites;
  std::uint64_t seed = VerifyOptions{}.seed;
};

struct Input {
  Arrangement arrangement;
  std::optional<RootSystemSpec> root_system;
};

Input load(const RunConfig& cfg) {
  if (cfg.family.empty() == cfg.input.empty()) throw InputError("give exactly one of --family or --input");
  std::optional<RootSystemSpec> spec;
  std::optional<Arrangement> a;
  if (!cfg.family.empty()) {
    const FamilyId id = parse_family_id(cfg.family);
    if (id.kind == FamilyId::Kind::RootSystem) {
      spec = root_system_spec(id.type, id.rank);
      a = spec->arrangement();
    } else {
      a = family_arrangement(id);
    }
  } else {
    a = load_arrangement(cfg.input);
  }
  if (cfg.dedup) a = dedup_columns(*a);
  return {std::move(*a), std::move(spec)};
}

EnumerationOptions enumeration(const RunConfig& cfg) {
  EnumerationOptions o;
  o.subset_budget = cfg.budget_subsets;
  o.threads = cfg.threads;
  return o;
}

SweepOptions sweep(const RunConfig& cfg) {
  SweepOptions o;
  static_cast<EnumerationOptions&>(o) = enumeration(cfg);
  o.strategy = cfg.sweep == "exhaustive" ? SweepStrategy::Exhaustive : SweepStrategy::LatticeClasses;
  return o;
}

OracleOptions oracle(const RunConfig& cfg) {
  OracleOptions o;
  o.point_budget = cfg.budget_oracle;
  o.threads = cfg.threads;
  return o;
}

std::string header(const Arrangement& a) {
  std::ostringstream os;
  os << "arrangement: " << (a.label().empty() ? "(unnamed)" : a.label()) << " (m = " << a.dimension()
     << ", n = " << a.size() << ")\n";
  return os.str();
}

std::vector<std::string> via_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "subsets" && item != "gf" && item != "oracle")
      throw InputError("--via accepts subsets, gf and oracle, got '" + item + "'");
    if (std::find(out.begin(), out.end(), item) != out.end()) throw InputError("--via lists '" + item + "' twice");
    out.push_back(item);
  }
  if (out.empty()) throw InputError("--via needs at least one path");
  return out;
}

QuasiPolynomial compute(const std::string& via, const Input& in, const RunConfig& cfg) {
  const Arrangement& a = in.arrangement;
  if (via == "subsets") return characteristic_quasipolynomial(a, sweep(cfg));
  if (via == "gf") {
    if (!in.root_system || cfg.dedup)
      throw InputError("--via gf uses the closed form and needs a root-system --family without --dedup");
    return root_system_quasipolynomial(*in.root_system);
  }
  const BigInt rho = lcm_period(a, enumeration(cfg));
  if (!fits_u64(rho)) throw ResourceError("lcm period " + rho.get_str() + " does not fit in 64 bits", 0, 0);
  const OracleOptions oo = oracle(cfg);
  const BigInt largest = pow(rho * static_cast<unsigned long>(a.dimension() + 1), static_cast<unsigned long>(a.dimension()));
  if (!fits_u64(largest) || to_u64(largest) > oo.point_budget)
    throw ResourceError("oracle interpolation needs up to " + largest.get_str() + " points per modulus (period " +
                            rho.get_str() + "); the point budget is " + std::to_string(oo.point_budget),
                        largest.get_d(), static_cast<long double>(oo.point_budget));
  PointSource points = [&](const BigInt& q) {
    if (!fits_u64(q) || to_u64(q) >= (std::uint64_t{1} << 31))
      throw ResourceError("oracle modulus " + q.get_str() + " is out of range", 0, 0);
    return from_u64(count_complement(a, to_u64(q), oo));
  };
  return quasipolynomial_via_interpolation(points, to_u64(rho), a.dimension());
}

/// Runs every requested path and insists they describe the same function.
QuasiPolynomial compute_agreed(const Input& in, const RunConfig& cfg, std::vector<std::string>& paths) {
  paths = via_list(cfg.via);
  std::optional<QuasiPolynomial> first;
  std::optional<QuasiPolynomial> first_min;
  for (const auto& via : paths) {
    QuasiPolynomial chi = compute(via, in, cfg);
    QuasiPolynomial reduced = minimum_period(chi);
    if (!first) {
      first = std::move(chi);
      first_min = std::move(reduced);
    } else if (reduced != *first_min) {
      throw IntegrityError("paths '" + paths.front() + "' and '" + via + "' disagree");
    }
  }
  return *first;
}

std::string join_paths(const std::vector<std::string>& paths) {
  std::string s;
  for (std::size_t i = 0; i < paths.size(); ++i) s += (i ? ", " : "") + paths[i];
  return s;
}

json big_or_int(const BigInt& x) {
  if (fits_u64(x)) return to_u64(x);
  return x.get_str();
}

int cmd_period(const RunConfig& cfg, std::ostream& out) {
  const Input in = load(cfg);
  const Arrangement& a = in.arrangement;
  const std::size_t s_max = std::min(a.dimension(), a.size());
  const auto ladder = e_sets_by_size(a, s_max, enumeration(cfg));
  BigInt rho = 1;
  for (const auto& e : ladder.at(s_max)) rho = lcm(rho, e);

  if (cfg.json) {
    json l = json::object();
    for (const auto& [s, es] : ladder) {
      json vals = json::array();
      for (const auto& e : es) vals.push_back(e.get_str());
      l[std::to_string(s)] = std::move(vals);
    }
    json doc = {{"m", a.dimension()}, {"n", a.size()}, {"period", big_or_int(rho)}, {"e_sets", std::move(l)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << header(a) << "lcm period: " << rho.get_str() << '\n';
  for (const auto& [s, es] : ladder) {
    out << "e-set |J| <= " << s << ": {";
    bool first = true;
    for (const auto& e : es) {
      out << (first ? "" : ", ") << e.get_str();
      first = false;
    }
    out << "}\n";
  }
  return kOk;
}

int cmd_chi(const RunConfig& cfg, std::ostream& out) {
  const Input in = load(cfg);
  std::vector<std::string> paths;
  const QuasiPolynomial chi = compute_agreed(in, cfg, paths);
  if (cfg.json) {
    out << to_json(chi) << '\n';
    return kOk;
  }
  out << header(in.arrangement) << "via: " << join_paths(paths) << '\n'
      << "period: " << chi.period << '\n'
      << "minimum period: " << minimum_period(chi).period << '\n'
      << to_string(chi);
  return kOk;
}

int cmd_gf(const RunConfig& cfg, std::ostream& out) {
  RunConfig c = cfg;
  const Input in = load(cfg);
  if (c.via.empty()) c.via = in.root_system && !cfg.dedup ? "gf" : "subsets";
  std::vector<std::string> paths;
  const QuasiPolynomial chi = minimum_period(compute_agreed(in, c, paths));
  const RationalGF canonical = paths.front() == "gf"
                                   ? to_canonical(root_system_gf(*in.root_system), chi.period, chi.degree)
                                   : gf_from_quasipoly(chi);
  const RationalGF simplified = simplify(canonical);
  const auto series = series_expand(canonical, cfg.series_terms);

  if (cfg.json) {
    json s = json::array();
    for (const auto& x : series) s.push_back(x.get_str());
    json doc = {{"canonical", json::parse(to_json(canonical))},
                {"simplified", json::parse(to_json(simplified))},
                {"series", std::move(s)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << header(in.arrangement) << "via: " << join_paths(paths) << '\n';
  if (in.root_system && !cfg.dedup) out << "closed form: " << format_power_form(root_system_gf(*in.root_system)) << '\n';
  out << "canonical: " << format_power_form(canonical) << '\n'
      << "simplified: " << format_power_form(simplified) << '\n'
      << "factored: " << format_factored(canonical) << '\n'
      << "series:";
  for (const auto& x : series) out << ' ' << x.get_str();
  out << '\n';
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Input in = load(cfg);
  std::vector<std::uint64_t> qs = cfg.q_values;
  for (std::uint64_t q = 1; q <= cfg.q_max; ++q) qs.push_back(q);
  if (qs.empty()) throw InputError("oracle needs -q or --q-max");
  const OracleOptions oo = oracle(cfg);
  std::vector<std::uint64_t> counts;
  for (auto q : qs) counts.push_back(count_complement(in.arrangement, q, oo));
  if (cfg.json) {
    json c = json::object();
    for (std::size_t i = 0; i < qs.size(); ++i) c[std::to_string(qs[i])] = counts[i];
    out << json{{"counts", std::move(c)}}.dump(2) << '\n';
    return kOk;
  }
  out << header(in.arrangement);
  for (std::size_t i = 0; i < qs.size(); ++i) out << "|M_" << qs[i] << "| = " << counts[i] << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
  VerifyOptions vo;
  vo.seed = cfg.seed;
  vo.threads = cfg.threads;
  bool all_passed = true;
  json doc = json::array();
  for (const auto& suite : suites) {
    for (const auto& r : run_suite(suite, vo)) {
      all_passed = all_passed && r.passed;
      if (cfg.json) {
        doc.push_back({{"suite", suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << suite << '/' << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
      }
    }
  }
  if (cfg.json) out << doc.dump(2) << '\n';
  return all_passed ? kOk : kCheckFailed;
}

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  auto* fam = cmd->add_option("--family", cfg.family, "built-in arrangement: A:3, B:4, E:6, F:4, G:2, mid:5, ...");
  auto* file = cmd->add_option("--input", cfg.input, "matrix file (\"m n\" header, then m rows)");
  fam->excludes(file);
  cmd->add_flag("--dedup", cfg.dedup, "drop columns equal to an earlier column up to sign");
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--json", cfg.json, "machine-readable output");
  cmd->add_option("--threads", cfg.threads, "worker threads (default: QUASICHAR_THREADS or all cores)");
}

void add_budget_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--budget-subsets", cfg.budget_subsets, "largest planned subset count to attempt")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-oracle", cfg.budget_oracle, "largest q^m the oracle may enumerate")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Characteristic quasi-polynomials of integral matrices"};
  app.name("quasichar");
  app.require_subcommand(1);

  auto* period = app.add_subcommand("period", "lcm period and the e-set ladder");
  add_input_options(period, cfg);
  add_common_options(period, cfg);
  add_budget_options(period, cfg);

  auto* chi = app.add_subcommand("chi", "characteristic quasi-polynomial");
  add_input_options(chi, cfg);
  add_common_options(chi, cfg);
  add_budget_options(chi, cfg);
  chi->add_option("--via", cfg.via, "subsets, gf, oracle, or a comma-separated list that must agree")
      ->capture_default_str();
  chi->add_option("--sweep", cfg.sweep, "subset-sum strategy")
      ->check(CLI::IsMember({"lattice", "exhaustive"}))
      ->capture_default_str();

  auto* gf = app.add_subcommand("gf", "generating function sum_q chi(q) t^q");
  add_input_options(gf, cfg);
  add_common_options(gf, cfg);
  add_budget_options(gf, cfg);
  gf->add_option("--via", cfg.via, "path used for chi (default: gf for root systems, else subsets)");
  gf->add_option("--sweep", cfg.sweep, "subset-sum strategy")->check(CLI::IsMember({"lattice", "exhaustive"}));
  gf->add_option("-N,--series-terms", cfg.series_terms, "number of series coefficients to print")
      ->capture_default_str();

  auto* orc = app.add_subcommand("oracle", "brute-force |M_q| by enumerating (Z/q)^m");
  add_input_options(orc, cfg);
  add_common_options(orc, cfg);
  add_budget_options(orc, cfg);
  orc->add_option("-q", cfg.q_values, "moduli to count")->check(CLI::PositiveNumber);
  orc->add_option("--q-max", cfg.q_max, "count every q in 1..N");

  auto* ver = app.add_subcommand("verify", "run built-in check suites");
  add_common_options(ver, cfg);
  ver->add_option("--suite", cfg.suites, "suite name (repeatable; default: all)")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gf->parsed() && gf->count("--via") == 0) cfg.via.clear();
    if (period->parsed()) return cmd_period(cfg, out);
    if (chi->parsed()) return cmd_chi(cfg, out);
    if (gf->parsed()) return cmd_gf(cfg, out);
    if (orc->parsed()) return cmd_oracle(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrityError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace quasichar::cli
