#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "infinigb/bijection.hpp"
#include "infinigb/division.hpp"
#include "infinigb/errors.hpp"
#include "infinigb/groebner.hpp"
#include "infinigb/hilbert.hpp"
#include "infinigb/ideal.hpp"
#include "infinigb/identities.hpp"
#include "infinigb/random.hpp"
#include "infinigb/regular.hpp"

namespace infinigb::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxBound = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format format_for(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

Execution execution_of(const RunConfig& c) {
  if (c.execution == "serial") return Execution::Serial;
  if (c.execution == "parallel") return Execution::Parallel;
  throw UsageError("unknown execution mode '" + c.execution + "'");
}

Field field_of(const RunConfig& c) {
  if (c.field == "QQ") return Field::rationals();
  std::uint32_t q = 0;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(c.field, &used);
    if (used != c.field.size() || v > 0xffffffffUL) throw std::invalid_argument("field");
    q = static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError("field must be QQ or a prime, got '" + c.field + "'");
  }
  return Field::prime(q);
}

RingPtr ring_of(const RunConfig& c) {
  return Ring::make(parse_order(c.order), WeightedAlphabet::parse(c.weights), field_of(c));
}

void check_bound(std::uint64_t value, const char* name, std::uint64_t min = 1) {
  if (value < min) throw UsageError(std::string(name) + " must be at least " + std::to_string(min));
  if (value > kMaxBound)
    throw UsageError(std::string(name) + " = " + std::to_string(value) + " overflows the limit " +
                     std::to_string(kMaxBound));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) {
    try {
      out.push_back(Polynomial::parse(ring, t));
    } catch (const ParseError& e) {
      throw UsageError("malformed polynomial '" + t + "': " + e.what());
    }
  }
  return out;
}

Json strings(const std::vector<Polynomial>& polys) {
  Json a = Json::array();
  for (const auto& f : polys) a.push_back(f.to_string());
  return a;
}

IdealPresentation ideal_of(const RunConfig& c, const RingPtr& ring) {
  const auto w = VariableSet::parse(c.w_rule);
  if (!c.family.empty()) {
    FamilyTemplate rule = [&] {
      try {
        return FamilyTemplate::parse(c.family);
      } catch (const ParseError& e) {
        throw UsageError("malformed family template '" + c.family + "': " + e.what());
      }
    }();
    return IdealPresentation::family(ring, std::move(rule), c.p, w);
  }
  std::vector<std::string> texts = c.gens;
  if (!c.gens_file.empty())
    for (auto& line : read_lines(c.gens_file)) texts.push_back(std::move(line));
  if (texts.empty()) throw UsageError("give generators with --family, --gen or --gens");
  return IdealPresentation::explicit_generators(ring, parse_all(ring, texts), w);
}

GroebnerBasis basis_for(const std::vector<Polynomial>& gens, const RingPtr& ring,
                        TruncationWindow window, Execution exec) {
  if (gens.empty()) return GroebnerBasis(ring, {}, window, Certificate::BuchbergerVerified, true);
  if (auto bs = bayer_stillman_basis(gens, window)) return *bs;
  return buchberger_truncated(gens, ring, window, {true, exec});
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_orders_demo(const RunConfig& c, std::ostream& out) {
  const WeightedAlphabet w = WeightedAlphabet::standard();
  const std::vector<Monomial> mons = {parse_monomial("x4"), parse_monomial("x1*x3"),
                                      parse_monomial("x2^2"), parse_monomial("x1^2*x2"),
                                      parse_monomial("x1^4")};
  struct Expected {
    OrderKind order;
    std::vector<std::string> chain;
  };
  const std::vector<Expected> expected = {
      {OrderKind::HomLex, {"x4", "x1*x3", "x2^2", "x1^2*x2", "x1^4"}},
      {OrderKind::HomAntiLex, {"x1^4", "x1^2*x2", "x1*x3", "x2^2", "x4"}},
      {OrderKind::HomRevLex, {"x4", "x2^2", "x1*x3", "x1^2*x2", "x1^4"}},
      {OrderKind::HomAntiRevLex, {"x1^4", "x1^2*x2", "x2^2", "x1*x3", "x4"}},
  };
  bool passed = true;
  std::size_t comparisons = 0;
  Json chains = Json::array();
  for (const auto& e : expected) {
    auto sorted = mons;
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
      return compare(a, b, e.order, w) > 0;
    });
    std::vector<std::string> got;
    for (const auto& m : sorted) got.push_back(to_string(m));
    // Every pair of the expected chain must compare the way the chain says.
    bool ok = got == e.chain;
    for (std::size_t i = 0; i < e.chain.size(); ++i)
      for (std::size_t j = i + 1; j < e.chain.size(); ++j) {
        ++comparisons;
        if (compare(parse_monomial(e.chain[i]), parse_monomial(e.chain[j]), e.order, w) <= 0)
          ok = false;
      }
    passed = passed && ok;
    chains.push_back({{"order", order_name(e.order)}, {"chain", got}, {"match", ok}});
  }
  if (format_for(c, Format::Json) == Format::Tsv) {
    for (const auto& ch : chains) {
      out << ch["order"].get<std::string>() << '\t';
      const auto& items = ch["chain"];
      for (std::size_t k = 0; k < items.size(); ++k)
        out << (k ? " > " : "") << items[k].get<std::string>();
      out << '\n';
    }
    out << "# comparisons " << comparisons << " verdict " << (passed ? "PASS" : "FAIL") << '\n';
  } else {
    Json j;
    j["command"] = "orders-demo";
    j["weights"] = w.describe();
    j["chains"] = chains;
    j["comparisons"] = comparisons;
    j["verdict"] = passed ? "PASS" : "FAIL";
    emit(out, j);
  }
  return passed ? 0 : 1;
}

int cmd_divide(const RunConfig& c, std::ostream& out) {
  const auto ring = ring_of(c);
  std::vector<std::string> texts = c.divisors;
  if (!c.divisors_file.empty())
    for (auto& line : read_lines(c.divisors_file)) texts.push_back(std::move(line));
  if (texts.empty()) throw UsageError("give divisors with --divisor or --divisors");
  if (c.input.empty()) throw UsageError("give the dividend with --input");
  auto divisors = parse_all(ring, texts);
  for (const auto& g : divisors)
    if (g.is_zero()) throw UsageError("divisors must be nonzero");
  sort_canonical(divisors);
  const auto f = parse_all(ring, {c.input}).front();
  const auto r = divide(f, divisors);
  if (format_for(c, Format::Json) == Format::Tsv) {
    out << "divisor\tquotient\n";
    for (std::size_t k = 0; k < divisors.size(); ++k)
      out << divisors[k].to_string() << '\t' << r.quotients[k].to_string() << '\n';
    out << "# remainder\t" << r.remainder.to_string() << '\n';
    out << "# steps\t" << r.steps << '\n';
  } else {
    Json j;
    j["command"] = "divide";
    j["ring"] = ring->describe();
    j["input"] = f.to_string();
    j["divisors"] = strings(divisors);
    j["quotients"] = strings(r.quotients);
    j["remainder"] = r.remainder.to_string();
    j["steps"] = r.steps;
    emit(out, j);
  }
  return 0;
}

int cmd_gb(const RunConfig& c, std::ostream& out) {
  check_bound(c.n, "--n");
  check_bound(c.deg, "--deg");
  check_bound(c.window_len, "--window-len", 2);
  const auto exec = execution_of(c);
  const auto ring = ring_of(c);
  const auto ideal = ideal_of(c, ring);
  const auto window = TruncationWindow::make(c.n, c.deg);
  const auto gens = ideal.instantiate(window);
  auto basis = basis_for(gens, ring, window, exec);
  if (c.reduced) basis = reduce_basis(basis);
  const auto criterion = verify_buchberger(basis.elements(), window, exec);
  const auto stable = stabilized_reduced_basis(ideal, c.n, c.window_len, c.deg);

  if (format_for(c, Format::Json) == Format::Tsv) {
    out << "element\n";
    for (const auto& g : basis.elements()) out << g.to_string() << '\n';
    out << "# certificate " << certificate_name(basis.certificate()) << " reduced "
        << (basis.reduced() ? "yes" : "no") << " criterion "
        << (criterion.passed ? "PASS" : "FAIL") << '\n';
  } else {
    Json j;
    j["command"] = "gb";
    j["ideal"] = ideal.describe();
    j["order"] = order_name(ring->order());
    j["ring"] = ring->describe();
    j["window"] = {{"n", window.var_bound}, {"D", window.degree_bound}};
    j["generators"] = strings(gens);
    j["elements"] = strings(basis.elements());
    j["certificate"] = certificate_name(basis.certificate());
    j["reduced"] = basis.reduced();
    j["criterion"] = {{"passed", criterion.passed},
                      {"pairs_checked", criterion.pairs_checked},
                      {"pairs_beyond_window", criterion.pairs_beyond_window}};
    j["stable"] = {{"elements", strings(stable.stable)},
                   {"entered_at", stable.entered_at},
                   {"unstable", strings(stable.unstable)},
                   {"stabilized", stable.stabilized},
                   {"sizes", stable.sizes},
                   {"window_len", stable.window_len},
                   {"caveat", stable.caveat}};
    j["verdict"] = criterion.passed ? "PASS" : "FAIL";
    emit(out, j);
  }
  return criterion.passed ? 0 : 1;
}

int cmd_hilbert(const RunConfig& c, std::ostream& out) {
  check_bound(c.big_n, "--N");
  const auto exec = execution_of(c);
  RunConfig eff = c;
  std::optional<WpSpec> spec;
  if (!c.preset.empty()) {
    if (c.preset == "schur-p2") spec = WpSpec::ab();
    else if (c.preset == "schur-p3") spec = WpSpec::ac();
    else throw UsageError("unknown preset '" + c.preset + "' (schur-p2, schur-p3)");
    eff.weights = "std";
  }
  auto ring = ring_of(eff);
  if (!is_homogeneous(ring->order()))
    throw UsageError("Hilbert series need a homogeneous order");
  const IdealPresentation ideal =
      spec ? IdealPresentation::binomial_family(ring, spec->p, spec->w) : ideal_of(c, ring);
  const std::size_t N = c.big_n;
  const VarIndex last = std::max<VarIndex>(1, ring->weights().max_index_with_weight_at_most(N));
  const auto window = TruncationWindow::make(last, N);
  const auto gens = ideal.instantiate(window);
  const auto basis = basis_for(gens, ring, window, exec);
  const auto ambient = ambient_series(ring->weights(), ideal.variables().bounded(last), N);
  const auto standard = quotient_series_from_standard_monomials(basis, ideal.variables(), N, exec);
  std::optional<TruncatedSeries> regular;
  try {
    regular = regular_sequence_series(ideal, N);
  } catch (const UncertifiedRegularity&) {
  }
  std::optional<std::vector<std::int64_t>> counts;
  if (spec) {
    const auto table = count_table(FamilySpec::x(*spec), static_cast<std::uint32_t>(N), exec);
    counts = std::vector<std::int64_t>(table.begin(), table.end());
  }
  bool passed = true;
  if (regular && *regular != standard) passed = false;
  if (counts && *counts != standard.coefficients()) passed = false;

  if (format_for(c, Format::Json) == Format::Tsv) {
    out << "n\tambient\tstandard_monomials";
    if (regular) out << "\tregular_sequence";
    if (counts) out << "\tpartition_count";
    out << '\n';
    for (std::size_t k = 0; k <= N; ++k) {
      out << k << '\t' << ambient[k] << '\t' << standard[k];
      if (regular) out << '\t' << (*regular)[k];
      if (counts) out << '\t' << (*counts)[k];
      out << '\n';
    }
    out << "# verdict " << (passed ? "PASS" : "FAIL") << '\n';
  } else {
    Json j;
    j["command"] = "hilbert";
    j["ideal"] = ideal.describe();
    j["preset"] = c.preset.empty() ? Json(nullptr) : Json(c.preset);
    j["N"] = N;
    j["ambient"] = ambient.coefficients();
    j["standard_monomials"] = standard.coefficients();
    j["regular_sequence"] = regular ? Json(regular->coefficients()) : Json(nullptr);
    j["partition_counts"] = counts ? Json(*counts) : Json(nullptr);
    j["two_route_agree"] = regular ? Json(*regular == standard) : Json(nullptr);
    j["verdict"] = passed ? "PASS" : "FAIL";
    emit(out, j);
  }
  return passed ? 0 : 1;
}

WpSpec spec_of(const RunConfig& c) {
  if (c.preset == "AB") return WpSpec::ab();
  if (c.preset == "AC") return WpSpec::ac();
  if (!c.preset.empty()) throw UsageError("unknown preset '" + c.preset + "' (AB, AC)");
  return WpSpec::make(VariableSet::parse(c.w_rule), c.p);
}

int cmd_bijection(const RunConfig& c, std::ostream& out) {
  check_bound(c.n, "--n", 0);
  if (c.route != "division" && c.route != "oracle" && c.route != "both")
    throw UsageError("--route must be division, oracle or both");
  const auto spec = spec_of(c);
  const auto report = verify_bijection(spec, c.n, execution_of(c));
  const bool both = c.route == "both";
  std::vector<Partition> oracle;
  if (c.route != "division")
    for (const auto& [lambda, mu] : report.rows) oracle.push_back(merge_parts(lambda, spec));

  Json summary;
  summary["spec"] = {{"W", spec.w.describe()}, {"p", spec.p}};
  summary["n"] = c.n;
  summary["route"] = c.route;
  summary["size_x"] = report.size_x;
  summary["size_y"] = report.size_y;
  summary["phi_into_y"] = report.phi_into_y;
  summary["psi_into_x"] = report.psi_into_x;
  summary["phi_injective"] = report.phi_injective;
  summary["psi_phi_identity"] = report.psi_phi_identity;
  summary["phi_psi_identity"] = report.phi_psi_identity;
  summary["routes_agree"] = report.routes_agree;
  summary["failures"] = report.failures;
  summary["verdict"] = report.passed() ? "PASS" : "FAIL";

  if (format_for(c, Format::Tsv) == Format::Tsv) {
    out << "lambda\tphi" << (both ? "\tphi_oracle" : "") << '\n';
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
      const auto& [lambda, mu] = report.rows[k];
      out << lambda.to_string() << '\t'
          << (c.route == "oracle" ? oracle[k].to_string() : mu.to_string());
      if (both) out << '\t' << oracle[k].to_string();
      out << '\n';
    }
    out << "# " << summary.dump() << '\n';
  } else {
    Json rows = Json::array();
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
      const auto& [lambda, mu] = report.rows[k];
      Json row;
      row["lambda"] = lambda.to_string();
      row["phi"] = c.route == "oracle" ? oracle[k].to_string() : mu.to_string();
      if (both) row["phi_oracle"] = oracle[k].to_string();
      rows.push_back(row);
    }
    Json j;
    j["command"] = "bijection";
    j["rows"] = rows;
    j["summary"] = summary;
    emit(out, j);
  }
  return report.passed() ? 0 : 1;
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  check_bound(c.big_n, "--N");
  const auto exec = execution_of(c);
  std::vector<IdentityReport> reports;
  if (c.schur) reports.push_back(schur_identity_check(c.big_n, exec));
  if (c.rr) reports.push_back(rr_identity_check(c.big_n, exec));
  if (!c.schur && !c.rr) reports.push_back(xy_identity_check(spec_of(c), c.big_n, exec));
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (format_for(c, Format::Json) == Format::Tsv) {
    for (const auto& r : reports) {
      out << "# identity " << r.name << '\n' << 'n';
      for (const auto& col : r.columns) out << '\t' << col;
      out << '\n';
      for (std::size_t k = 0; k <= r.truncation; ++k) {
        out << k;
        for (const auto& v : r.values) out << '\t' << v[k];
        out << '\n';
      }
      for (const auto& f : r.failures) out << "# failure " << f << '\n';
      out << "# verdict " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
  } else {
    Json list = Json::array();
    for (const auto& r : reports) {
      Json cols = Json::object();
      for (std::size_t k = 0; k < r.columns.size(); ++k) cols[r.columns[k]] = r.values[k];
      list.push_back({{"identity", r.name},
                      {"N", r.truncation},
                      {"columns", cols},
                      {"failures", r.failures},
                      {"verdict", r.passed() ? "PASS" : "FAIL"}});
    }
    Json j;
    j["command"] = "identities";
    j["reports"] = list;
    j["verdict"] = passed ? "PASS" : "FAIL";
    emit(out, j);
  }
  return passed ? 0 : 1;
}

// Randomized property suites, reproducible from the seed.
int cmd_properties(const RunConfig& c, std::ostream& out) {
  check_bound(c.count, "--count");
  Rng rng(c.seed);
  struct Suite {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
  };
  std::vector<Suite> suites;

  Suite division{"division_contract", 0, {}};
  for (std::uint32_t k = 0; k < c.count; ++k) {
    const auto ring = Ring::make(random_order(rng, false));
    RandomPolynomialShape shape{4, 6, 4, 3, false};
    const auto f = random_polynomial(rng, ring, shape);
    auto gs = random_generators(rng, ring, shape, 3);
    const auto r = divide(f, gs);
    Polynomial sum = r.remainder;
    bool ok = true;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const auto prod = r.quotients[i] * gs[i];
      sum += prod;
      if (!prod.is_zero() && ring->compare(prod.lm(), f.lm()) > 0) ok = false;
    }
    for (const auto& t : r.remainder.terms())
      for (const auto& g : gs)
        if (divides(g.lm(), t.monomial)) ok = false;
    if (sum != f) ok = false;
    ++division.cases;
    if (!ok) division.failures.push_back("f = " + f.to_string());
  }
  suites.push_back(division);

  Suite unique{"reduced_basis_uniqueness", 0, {}};
  for (std::uint32_t k = 0; k < std::max<std::uint32_t>(c.count / 10, 1); ++k) {
    const auto ring = Ring::make(random_order(rng, true));
    RandomPolynomialShape shape{4, 5, 3, 3, true};
    auto gens = random_generators(rng, ring, shape, 3);
    const auto window = TruncationWindow::make(4, 12);
    const auto reference = reduce_basis(buchberger_truncated(gens, ring, window)).elements();
    for (int s = 0; s < 5; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      if (reduce_basis(buchberger_truncated(gens, ring, window)).elements() != reference)
        unique.failures.push_back("generators " + strings(gens).dump());
    }
    ++unique.cases;
  }
  suites.push_back(unique);

  Suite cards{"xy_cardinality", 0, {}};
  for (int k = 0; k < 3; ++k) {
    const auto spec = random_wp_spec(rng);
    const auto x = count_table(FamilySpec::x(spec), 30);
    const auto y = count_table(FamilySpec::y(spec), 30);
    if (x != y) cards.failures.push_back(spec.describe());
    ++cards.cases;
  }
  suites.push_back(cards);

  bool passed = true;
  Json list = Json::array();
  for (const auto& s : suites) {
    passed = passed && s.failures.empty();
    list.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
  }
  if (format_for(c, Format::Json) == Format::Tsv) {
    out << "# seed " << c.seed << '\n' << "suite\tcases\tfailures\n";
    for (const auto& s : suites) out << s.name << '\t' << s.cases << '\t' << s.failures.size() << '\n';
    out << "# verdict " << (passed ? "PASS" : "FAIL") << '\n';
  } else {
    Json j;
    j["command"] = "properties";
    j["seed"] = c.seed;
    j["suites"] = list;
    j["verdict"] = passed ? "PASS" : "FAIL";
    emit(out, j);
  }
  return passed ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "orders-demo") return cmd_orders_demo(config, out);
    if (config.command == "divide") return cmd_divide(config, out);
    if (config.command == "gb") return cmd_gb(config, out);
    if (config.command == "hilbert") return cmd_hilbert(config, out);
    if (config.command == "bijection") return cmd_bijection(config, out);
    if (config.command == "identities") return cmd_identities(config, out);
    if (config.command == "properties") return cmd_properties(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Truncated Groebner bases, Hilbert series and partition identities", "infinigb"};
  app.set_config("--config", "", "TOML file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", config.seed, "seed for randomized suites");
  app.add_option("--order", config.order, "plex, hlex, halex, hrevlex or harevlex")
      ->check(CLI::IsMember({"plex", "hlex", "halex", "hrevlex", "harevlex"}));
  app.add_option("--weights", config.weights, "'std' or 'd1,d2,...;tail=A*i+B'");
  app.add_option("--field", config.field, "QQ or a prime");
  app.add_option("--W", config.w_rule, "all, odd, pm<k>mod<m>, nonzeromod<q>, res<r,...>mod<m>");
  app.add_option("--p", config.p, "family parameter");
  app.add_option("--family", config.family, "generator template, e.g. x{i}^p - x{p*i}");
  app.add_option("--gen", config.gens, "explicit generator (repeatable)");
  app.add_option("--gens", config.gens_file, "file with one generator per line");
  app.add_option("--divisor", config.divisors, "divisor (repeatable)");
  app.add_option("--divisors", config.divisors_file, "file with one divisor per line");
  app.add_option("--input", config.input, "polynomial to divide");
  app.add_option("--preset", config.preset, "schur-p2, schur-p3 (hilbert); AB, AC (bijection)");
  app.add_option("--route", config.route, "division, oracle or both");
  app.add_option("--execution", config.execution, "serial or parallel");
  app.add_option("--n", config.n, "variable bound, or partition weight");
  app.add_option("--deg", config.deg, "degree bound");
  app.add_option("--N", config.big_n, "series truncation");
  app.add_option("--window-len", config.window_len, "trailing window for stabilization");
  app.add_option("--count", config.count, "cases per randomized suite");
  app.add_flag("--reduced", config.reduced, "reduce the basis");
  app.add_flag("--schur", config.schur, "check the Schur identities");
  app.add_flag("--rr", config.rr, "check the Rogers-Ramanujan identity");

  for (const char* name :
       {"orders-demo", "divide", "gb", "hilbert", "bijection", "identities", "properties"})
    app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (format == "json") config.format = Format::Json;
  if (format == "tsv") config.format = Format::Tsv;
  return run(config, out, err);
}

}  // namespace infinigb::cli
