/*
 * Copyright 2026 The frobound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "frobound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "frobound/bounds.hpp"
#include "frobound/froeberg.hpp"
#include "frobound/macaulay.hpp"
#include "frobound/quotient.hpp"

namespace frobound::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int d = 0;
  std::optional<int> n;
  std::optional<int> a;
  std::string degrees;
  std::string n_list;
  std::uint32_t prime = 32003;
  std::uint64_t seed = 0;
  int trials = 20;
  std::optional<long long> q_max;
  std::string format = "json";
  std::string out_path;
  std::optional<long long> a_invariant;
  std::string fixture;
  std::string ideal_file;
  int workers = 1;
  int max_draws = 8;
  std::string element;
  std::string q_list;
  int witness_degree = 2;
  std::optional<int> cutoff;
  std::string convention = "clip";
};

struct Rendered {
  json doc;
  std::string tsv;
  std::string pretty;
  int code = kSuccess;
};

json big(const BigInteger& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(x);
  }
  return x.str();
}

json header(const RunConfig& c) {
  json j;
  j["schema"] = 1;
  j["command"] = c.command;
  j["seed"] = c.seed;
  return j;
}

json degree_type_json(const DegreeType& dt) {
  return json{{"d", dt.d()}, {"degrees", dt.degrees()}};
}

json hypotheses_json(const std::vector<Hypothesis>& hs) {
  json arr = json::array();
  for (auto h : hs) arr.push_back(to_string(h));
  return arr;
}

DegreeType degree_type_of(const RunConfig& c) {
  if (!c.degrees.empty()) {
    if (c.n || c.a) throw UsageError("--degrees cannot be combined with --n/--a");
    return DegreeType(c.d, parse_int_list(c.degrees));
  }
  if (!c.n || !c.a) throw UsageError("give either --degrees or both --n and --a");
  return DegreeType::constant(c.d, *c.n, *c.a);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string join(const std::vector<long long>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

// ----------------------------------------------------------------- froeberg

Rendered cmd_froeberg(const RunConfig& c) {
  const DegreeType dt = degree_type_of(c);
  if (dt.n() < dt.d() + 1) {
    throw PreconditionError("no inclusion bound (n < d+1) for " + dt.to_string());
  }
  if (c.convention != "clip" && c.convention != "truncate") {
    throw UsageError("--convention must be clip or truncate");
  }
  const long long m0 = smallest_zero(dt);
  const FroebergProfile profile = froeberg_profile(dt);
  TruncatedSeries series{std::vector<BigInteger>(profile.values)};
  const TruncatedSeries plus =
      c.convention == "clip" ? clip_nonneg(series) : truncate_at_first_nonpositive(series);

  Rendered r;
  r.doc = header(c);
  r.doc["degree_type"] = degree_type_json(dt);
  r.doc["convention"] = c.convention;
  r.doc["m0"] = m0;
  r.doc["cutoff"] = series.cutoff();
  json values = json::array();
  std::ostringstream tsv, pretty;
  tsv << "# m0\t" << m0 << "\nm\tF\tF_plus\n";
  pretty << "Froeberg function, " << dt.to_string() << "\n\n"
         << std::setw(6) << "m" << std::setw(24) << "F(m)" << std::setw(24) << "F+(m)" << '\n';
  for (std::size_t m = 0; m < series.size(); ++m) {
    values.push_back({{"m", m}, {"F", big(series[m])}, {"F_plus", big(plus[m])}});
    tsv << m << '\t' << series[m] << '\t' << plus[m] << '\n';
    pretty << std::setw(6) << m << std::setw(24) << series[m] << std::setw(24) << plus[m] << '\n';
  }
  r.doc["values"] = std::move(values);
  pretty << "\nm0 = " << m0 << '\n';
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

// ------------------------------------------------------------------- bounds

Rendered cmd_bounds(const RunConfig& c) {
  const DegreeType dt = degree_type_of(c);
  const BoundReport rep = bound_report(dt, c.a_invariant);
  Rendered r;
  r.doc = header(c);
  r.doc["degree_type"] = degree_type_json(dt);
  r.doc["m0"] = rep.m0;
  if (rep.a_invariant) r.doc["a_invariant"] = *rep.a_invariant;
  std::vector<std::pair<std::string, TaggedBound>> rows = {
      {"tight", rep.tight}, {"frobenius", rep.frobenius}};
  if (rep.ideal_cm) rows.emplace_back("ideal", *rep.ideal_cm);
  rows.emplace_back("koszul", rep.koszul);
  rows.emplace_back("semistable", rep.semistable);
  if (rep.semistable_frobenius) rows.emplace_back("semistable_improved", *rep.semistable_frobenius);

  json bounds;
  std::ostringstream tsv, pretty;
  tsv << "bound\tdegree\thypotheses\n";
  pretty << "Inclusion bounds for " << dt.to_string() << "  (m0 = " << rep.m0 << ")\n\n";
  for (const auto& [name, b] : rows) {
    bounds[name] = {{"degree", b.degree}, {"hypotheses", hypotheses_json(b.hypotheses)}};
    std::string hyp;
    for (auto h : b.hypotheses) hyp += (hyp.empty() ? "" : ",") + to_string(h);
    tsv << name << '\t' << b.degree << '\t' << hyp << '\n';
    std::string label = name;
    if (label == "semistable_improved") label = "semistable-improved (Frobenius)";
    pretty << "  " << std::left << std::setw(34) << label << std::right << std::setw(6) << b.degree
           << "   needs: " << hyp << '\n';
  }
  r.doc["bounds"] = std::move(bounds);
  pretty << "\nEach bound holds only under the hypotheses listed next to it.\n";
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

// -------------------------------------------------------------------- table

Rendered cmd_table(const RunConfig& c) {
  if (!c.a) throw UsageError("table needs --a");
  if (c.n_list.empty()) throw UsageError("table needs --n, e.g. --n 3..8,10,11");
  const BoundTable t = build_table(c.d, *c.a, parse_int_list(c.n_list));
  const std::vector<std::pair<BoundFamily, std::string>> families = {
      {BoundFamily::kKoszul, "m = " + std::to_string(c.d + 1) + "*a"},
      {BoundFamily::kSemistable, "m = ceil(d*n/(n-1)*a)"},
      {BoundFamily::kGeneric, "m = m0+" + std::to_string(c.d)},
  };
  Rendered r;
  r.doc = header(c);
  r.doc["d"] = t.d;
  r.doc["a"] = t.a;
  r.doc["n_values"] = t.n_values;
  json rows, limits;
  std::ostringstream tsv, pretty;
  tsv << "family";
  for (int n : t.n_values) tsv << '\t' << n;
  tsv << "\tinf\n";
  pretty << "d = " << t.d << ", a = " << t.a << "\n\n" << std::left << std::setw(12) << "n"
         << std::setw(24) << "" << std::right;
  for (int n : t.n_values) pretty << std::setw(5) << n;
  pretty << " | " << std::setw(4) << "inf" << '\n';
  for (const auto& [family, formula] : families) {
    const auto& row = t.rows.at(family);
    rows[to_string(family)] = row;
    limits[to_string(family)] = t.limit_column.at(family);
    tsv << to_string(family) << '\t' << join(row, "\t") << '\t' << t.limit_column.at(family) << '\n';
    pretty << std::left << std::setw(12) << to_string(family) << std::setw(24) << formula
           << std::right;
    for (long long v : row) pretty << std::setw(5) << v;
    pretty << " | " << std::setw(4) << t.limit_column.at(family) << '\n';
  }
  r.doc["rows"] = std::move(rows);
  r.doc["limits"] = std::move(limits);
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

// ------------------------------------------------------------------ hilbert

Rendered render_hilbert(const RunConfig& c, const FormSystem& sys, const HilbertTable& table) {
  Rendered r;
  r.doc = header(c);
  r.doc["prime"] = sys.field.modulus();
  r.doc["variables"] = sys.variables;
  r.doc["degrees"] = sys.degrees();
  r.doc["hilbert"] = table.values;
  r.doc["first_zero"] = table.first_zero ? json(*table.first_zero) : json(nullptr);
  std::ostringstream tsv, pretty;
  tsv << "m\tH\n";
  for (std::size_t m = 0; m < table.values.size(); ++m) tsv << m << '\t' << table.values[m] << '\n';
  pretty << "H = (" << join(table.values, ", ") << ")\nfirst zero: "
         << (table.first_zero ? std::to_string(*table.first_zero) : "none in window") << '\n';
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_hilbert(const RunConfig& c) {
  if (c.ideal_file.empty()) throw UsageError("hilbert needs --ideal-file");
  const FormSystem sys = parse_system(read_file(c.ideal_file));
  int cutoff = 0;
  if (c.cutoff) {
    cutoff = *c.cutoff;
  } else {
    const auto deg = sys.degrees();
    cutoff = static_cast<int>(std::accumulate(deg.begin(), deg.end(), 0LL)) - sys.variables + 2;
    cutoff = std::max(cutoff, 1);
  }
  return render_hilbert(c, sys, hilbert_table(sys, cutoff));
}

// ------------------------------------------------------------------- verify

Rendered cmd_verify_hilbert(const RunConfig& c) {
  const DegreeType dt = degree_type_of(c);
  const FroebergCheckReport rep = froeberg_check(dt, PrimeField(c.prime), c.trials, c.seed, c.workers);
  Rendered r;
  r.doc = header(c);
  r.doc["degree_type"] = degree_type_json(dt);
  r.doc["prime"] = rep.prime;
  r.doc["trials"] = c.trials;
  r.doc["predicted"] = rep.predicted;
  r.doc["predicted_first_zero"] =
      rep.predicted_first_zero ? json(*rep.predicted_first_zero) : json(nullptr);
  r.doc["inequality_violations"] = rep.inequality_violations;
  r.doc["equality_rate"] = rep.equality_rate;
  json trials = json::array();
  std::ostringstream tsv, pretty;
  tsv << "# inequality_violations\t" << rep.inequality_violations << "\n# equality_rate\t"
      << rep.equality_rate << "\ntrial\tseed\tequal\tfirst_zero\thilbert\n";
  tsv << "predicted\t-\t-\t"
      << (rep.predicted_first_zero ? std::to_string(*rep.predicted_first_zero) : "-") << '\t'
      << join(rep.predicted, ",") << '\n';
  for (std::size_t i = 0; i < rep.trials.size(); ++i) {
    const auto& t = rep.trials[i];
    trials.push_back({{"index", i},
                      {"seed", t.seed},
                      {"equal", t.equal},
                      {"first_zero", t.first_zero ? json(*t.first_zero) : json(nullptr)},
                      {"hilbert", t.hilbert},
                      {"violations", t.violations}});
    tsv << i << '\t' << t.seed << '\t' << (t.equal ? 1 : 0) << '\t'
        << (t.first_zero ? std::to_string(*t.first_zero) : "-") << '\t' << join(t.hilbert, ",")
        << '\n';
  }
  r.doc["trials_detail"] = std::move(trials);
  const bool ok = rep.inequality_violations == 0;
  r.doc["verdict"] = ok ? "PASS" : "FAIL";
  pretty << "Hilbert functions of " << c.trials << " random systems, " << dt.to_string()
         << ", p = " << rep.prime << ", seed = " << c.seed << "\n"
         << "F+ = (" << join(rep.predicted, ", ") << ")\n"
         << "violations of H >= F+: " << rep.inequality_violations << '\n'
         << "equality rate H = F+:  " << rep.equality_rate << '\n';
  for (std::size_t i = 0; i < rep.trials.size(); ++i) {
    const auto& t = rep.trials[i];
    pretty << "  trial " << i << ": first zero "
           << (t.first_zero ? std::to_string(*t.first_zero) : "-") << (t.equal ? "" : "  (differs)")
           << '\n';
  }
  pretty << (ok ? "PASS" : "FAIL") << '\n';
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  r.code = ok ? kSuccess : kVerificationFailed;
  return r;
}

std::unique_ptr<Fixture> fixture_of(const RunConfig& c) {
  if (c.fixture.empty()) throw UsageError("--fixture is required");
  std::optional<std::uint32_t> prime;
  if (c.fixture == "polynomial") prime = c.prime;
  auto fx = make_fixture(c.fixture, c.fixture == "polynomial" ? (c.d > 0 ? c.d : 2) : 2, prime);
  if (c.d > 0 && c.d != fx->d) {
    throw UsageError("fixture " + c.fixture + " has d=" + std::to_string(fx->d));
  }
  return fx;
}

json fixture_json(const Fixture& fx) {
  return json{{"name", fx.name},
              {"ring", fx.description},
              {"d", fx.d},
              {"prime", fx.ring.field().modulus()},
              {"a_invariant", fx.a_invariant}};
}

Rendered cmd_verify_theorem_c(const RunConfig& c) {
  auto fx = fixture_of(c);
  RunConfig with_d = c;
  with_d.d = fx->d;
  const DegreeType dt = degree_type_of(with_d);
  const long long ainv = c.a_invariant.value_or(fx->a_invariant);
  const TheoremCReport rep = verify_theorem_c(fx->ring, dt, ainv, c.seed, c.max_draws);
  Rendered r;
  r.doc = header(c);
  r.doc["fixture"] = fixture_json(*fx);
  r.doc["degree_type"] = degree_type_json(dt);
  r.doc["a_invariant"] = ainv;
  r.doc["m0"] = rep.m0;
  r.doc["bound_degree"] = rep.bound_degree;
  r.doc["draws"] = rep.draws;
  json elements = json::array();
  std::ostringstream tsv, pretty;
  tsv << "element\tcontained\n";
  std::size_t contained = 0;
  for (const auto& e : rep.elements) {
    elements.push_back({{"monomial", e.element.to_string()}, {"contained", e.contained}});
    tsv << e.element.to_string() << '\t' << (e.contained ? 1 : 0) << '\n';
    contained += e.contained ? 1 : 0;
  }
  r.doc["elements"] = std::move(elements);
  if (rep.ideal) r.doc["ideal"] = format_system(*rep.ideal);
  r.doc["verdict"] = rep.passed ? "PASS" : "FAIL";
  pretty << fx->description << ", " << dt.to_string() << ", a-invariant " << ainv << "\n"
         << "bound m0+d+1+a = " << rep.m0 << "+" << dt.d() << "+1" << (ainv < 0 ? "" : "+") << ainv << " = "
         << rep.bound_degree << '\n'
         << contained << " of " << rep.elements.size() << " basis elements of R_"
         << rep.bound_degree << " lie in the ideal (draws: " << rep.draws << ")\n"
         << (rep.passed ? "PASS" : "FAIL") << '\n';
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  r.code = rep.passed ? kSuccess : kVerificationFailed;
  return r;
}

FormSystem ideal_of(const RunConfig& c, const Fixture& fx, std::optional<std::uint64_t>& seed_used) {
  if (!c.ideal_file.empty()) {
    if (c.n || c.a || !c.degrees.empty()) throw UsageError("--ideal-file excludes --n/--a/--degrees");
    return parse_system(read_file(c.ideal_file));
  }
  if (c.n || c.a || !c.degrees.empty()) {
    RunConfig with_d = c;
    with_d.d = fx.d;
    const DegreeType dt = degree_type_of(with_d);
    seed_used = c.seed;
    SplitMix64 seeds(c.seed);
    return random_system(fx.ring.variables(), dt.degrees(), fx.ring.field(), seeds.next());
  }
  return fx.parameter_ideal;
}

Rendered cmd_verify_theorem_b(const RunConfig& c) {
  auto fx = fixture_of(c);
  std::optional<std::uint64_t> seed_used;
  const FormSystem ideal = ideal_of(c, *fx, seed_used);
  const long long p = fx->ring.field().characteristic();
  const long long q_max = c.q_max.value_or(p * p * p * p);
  const TheoremBReport rep = verify_theorem_b(fx->ring, ideal, q_max);
  Rendered r;
  r.doc = header(c);
  r.doc["fixture"] = fixture_json(*fx);
  r.doc["degree_type"] = degree_type_json(rep.degree_type);
  r.doc["ideal"] = format_system(ideal);
  r.doc["m0"] = rep.m0;
  r.doc["bound_degree"] = rep.bound_degree;
  r.doc["q_max"] = q_max;
  r.doc["q_tested"] = rep.q_tested;
  json elements = json::array();
  std::ostringstream tsv, pretty;
  tsv << "element\tsmallest_q\n";
  for (const auto& e : rep.elements) {
    elements.push_back({{"monomial", e.element.to_string()},
                        {"smallest_q", e.smallest_q ? json(*e.smallest_q) : json(nullptr)}});
    tsv << e.element.to_string() << '\t'
        << (e.smallest_q ? std::to_string(*e.smallest_q) : "unresolved") << '\n';
  }
  r.doc["elements"] = std::move(elements);
  r.doc["resolved"] = rep.resolved;
  r.doc["unresolved"] = rep.elements.size() - rep.resolved;
  r.doc["evidence_level"] =
      "bounded-q: membership in the Frobenius closure needs some q; elements unresolved up to "
      "q_max are not counterexamples";
  r.doc["verdict"] = rep.all_resolved ? "RESOLVED" : "PARTIAL";
  pretty << fx->description << ", " << rep.degree_type.to_string() << "\n"
         << "bound m0+d+1 = " << rep.bound_degree << ", q tested: " << join(rep.q_tested, ", ")
         << '\n'
         << rep.resolved << " of " << rep.elements.size() << " basis elements of R_"
         << rep.bound_degree << " resolved\n"
         << (rep.all_resolved ? "RESOLVED" : "PARTIAL") << " (bounded-q evidence)\n";
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_verify_tight(const RunConfig& c) {
  auto fx = fixture_of(c);
  std::optional<std::uint64_t> seed_used;
  const FormSystem ideal = ideal_of(c, *fx, seed_used);
  if (c.element.empty()) throw UsageError("verify tight needs --element, e.g. --element \"0 0 2\"");
  std::istringstream es(c.element);
  std::vector<int> exps;
  for (int e; es >> e;) exps.push_back(e);
  if (static_cast<int>(exps.size()) != fx->ring.variables()) {
    throw UsageError("--element needs " + std::to_string(fx->ring.variables()) + " exponents");
  }
  const Form f = Form::monomial(Monomial(exps));
  const long long p = fx->ring.field().characteristic();
  std::vector<long long> qs;
  if (c.q_list.empty()) {
    qs = {p, p * p};
  } else {
    for (int q : parse_int_list(c.q_list)) qs.push_back(q);
  }
  const auto witnesses = default_witness_pool(fx->ring.variables(), c.witness_degree);
  const TightScanReport rep = tight_witness_scan(fx->ring, ideal, f, witnesses, qs);
  Rendered r;
  r.doc = header(c);
  r.doc["fixture"] = fixture_json(*fx);
  r.doc["ideal"] = format_system(ideal);
  r.doc["element"] = c.element;
  r.doc["q_list"] = qs;
  json rows = json::array();
  std::ostringstream tsv, pretty;
  tsv << "witness";
  for (long long q : qs) tsv << "\tq=" << q;
  tsv << '\n';
  for (std::size_t u = 0; u < witnesses.size(); ++u) {
    const auto& w = witnesses[u].terms().begin()->first;
    json verdicts = json::array();
    tsv << w.to_string();
    for (const auto& v : rep.verdicts[u]) {
      verdicts.push_back(v.contained);
      tsv << '\t' << (v.contained ? 1 : 0);
    }
    tsv << '\n';
    rows.push_back({{"witness", w.to_string()}, {"contained", verdicts}});
  }
  r.doc["verdicts"] = std::move(rows);
  json passing = json::array();
  for (auto u : rep.passing_witnesses) passing.push_back(witnesses[u].terms().begin()->first.to_string());
  r.doc["passing_witnesses"] = passing;
  r.doc["evidence_level"] = "finitely many q: evidence for tight closure membership, not a certificate";
  r.doc["verdict"] = rep.some_witness_passes ? "WITNESS_FOUND" : "NO_WITNESS";
  pretty << fx->description << ", element (" << c.element << "), q in {" << join(qs, ", ")
         << "}\n"
         << rep.passing_witnesses.size() << " of " << witnesses.size()
         << " witnesses pass every q\n"
         << (rep.some_witness_passes ? "WITNESS_FOUND" : "NO_WITNESS") << " (evidence only)\n";
  r.tsv = tsv.str();
  r.pretty = pretty.str();
  return r;
}

// ------------------------------------------------------------------ options

void add_degree_options(CLI::App* sub, RunConfig& c, bool need_d) {
  auto* d = sub->add_option("--d", c.d, "projective dimension d (ring has d+1 variables)");
  if (need_d) d->required();
  sub->add_option("--n", c.n, "number of generators (constant degree)");
  sub->add_option("--a", c.a, "constant generator degree");
  sub->add_option("--degrees", c.degrees, "explicit degree list, e.g. 3,2,2,1");
}

void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json | tsv | pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  sub->add_option("--out", c.out_path, "write output to this file instead of stdout");
  sub->add_option("--seed", c.seed, "random seed (echoed in the output)");
}

std::uint32_t env_prime() {
  if (const char* s = std::getenv(kPrimeEnv)) {
    try {
      return static_cast<std::uint32_t>(std::stoul(s));
    } catch (const std::exception&) {
      throw UsageError(std::string(kPrimeEnv) + " is not a number");
    }
  }
  return 32003;
}

int env_workers() {
  if (const char* s = std::getenv(kWorkersEnv)) {
    try {
      return std::max(1, std::stoi(s));
    } catch (const std::exception&) {
      throw UsageError(std::string(kWorkersEnv) + " is not a number");
    }
  }
  return 1;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad integer list '" + text + "'");
    return v;
  };
  while (std::getline(in, part, ',')) {
    if (part.empty()) throw UsageError("bad integer list '" + text + "'");
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      const int lo = to_int(part.substr(0, dots));
      const int hi = to_int(part.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range '" + part + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  try {
    c.prime = env_prime();
    c.workers = env_workers();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"frobound: Froeberg function, generic closure bounds and finite-field checks"};
  app.name("frobound");
  app.require_subcommand(1);

  auto* froeberg = app.add_subcommand("froeberg", "F(m), F+(m) and the smallest zero m0");
  add_degree_options(froeberg, c, true);
  add_output_options(froeberg, c);
  froeberg->add_option("--convention", c.convention, "clip (pointwise max(0,F)) or truncate");

  auto* bounds = app.add_subcommand("bounds", "all inclusion bounds for one degree type");
  add_degree_options(bounds, c, true);
  add_output_options(bounds, c);
  bounds->add_option("--ainv", c.a_invariant, "a-invariant of a Cohen-Macaulay ring");

  auto* table = app.add_subcommand("table", "Koszul / semistable / generic bounds over n");
  table->add_option("--d", c.d, "projective dimension d")->required();
  table->add_option("--a", c.a, "constant generator degree")->required();
  table->add_option("--n", c.n_list, "generator counts, e.g. 3..8,10,11")->required();
  add_output_options(table, c);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a form-system file");
  hilbert->add_option("--ideal-file", c.ideal_file, "form system in text format")->required();
  hilbert->add_option("--cutoff", c.cutoff, "largest degree to compute");
  add_output_options(hilbert, c);

  auto* verify = app.add_subcommand("verify", "finite-field verification experiments");
  verify->require_subcommand(1);

  auto* vh = verify->add_subcommand("hilbert", "compare H of random systems with F+");
  add_degree_options(vh, c, true);
  add_output_options(vh, c);
  vh->add_option("--p", c.prime, "prime field (default $FROBOUND_PRIME or 32003)");
  vh->add_option("--trials", c.trials, "number of random systems")->check(CLI::PositiveNumber);
  vh->add_option("--workers", c.workers, "worker threads (default $FROBOUND_WORKERS or 1)");

  auto* vc = verify->add_subcommand("theorem-c", "R_{m0+d+1+a} inside I for generic I");
  vc->add_option("--fixture", c.fixture, "ring fixture")->required();
  add_degree_options(vc, c, false);
  add_output_options(vc, c);
  vc->add_option("--p", c.prime, "prime for the polynomial fixture");
  vc->add_option("--ainv", c.a_invariant, "override the fixture's a-invariant");
  vc->add_option("--max-draws", c.max_draws, "redraws allowed for non-primary ideals");

  auto* vb = verify->add_subcommand("theorem-b", "R_{m0+d+1} inside the Frobenius closure");
  vb->add_option("--fixture", c.fixture, "ring fixture")->required();
  add_degree_options(vb, c, false);
  add_output_options(vb, c);
  vb->add_option("--qmax", c.q_max, "largest Frobenius power tried (default p^4)");
  vb->add_option("--ideal-file", c.ideal_file, "ideal in text format (default: parameters)");

  auto* vt = verify->add_subcommand("tight", "witness scan for tight closure membership");
  vt->add_option("--fixture", c.fixture, "ring fixture")->required();
  add_degree_options(vt, c, false);
  add_output_options(vt, c);
  vt->add_option("--element", c.element, "monomial exponents, e.g. \"0 0 2\"")->required();
  vt->add_option("--q", c.q_list, "Frobenius powers (default p,p^2)");
  vt->add_option("--witness-degree", c.witness_degree, "witness pool: monomials up to this degree");
  vt->add_option("--ideal-file", c.ideal_file, "ideal in text format (default: parameters)");

  std::vector<const char*> argv{"frobound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'frobound --help' for usage\n";
    return kUsage;
  }

  try {
    Rendered r;
    if (froeberg->parsed()) {
      c.command = "froeberg";
      r = cmd_froeberg(c);
    } else if (bounds->parsed()) {
      c.command = "bounds";
      r = cmd_bounds(c);
    } else if (table->parsed()) {
      c.command = "table";
      r = cmd_table(c);
    } else if (hilbert->parsed()) {
      c.command = "hilbert";
      r = cmd_hilbert(c);
    } else if (vh->parsed()) {
      c.command = "verify hilbert";
      r = cmd_verify_hilbert(c);
    } else if (vc->parsed()) {
      c.command = "verify theorem-c";
      r = cmd_verify_theorem_c(c);
    } else if (vb->parsed()) {
      c.command = "verify theorem-b";
      r = cmd_verify_theorem_b(c);
    } else {
      c.command = "verify tight";
      r = cmd_verify_tight(c);
    }
    std::string text;
    if (c.format == "json") text = r.doc.dump(2) + "\n";
    else if (c.format == "tsv") text = r.tsv;
    else text = r.pretty;
    if (c.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(c.out_path);
      if (!file) throw UsageError("cannot write " + c.out_path);
      file << text;
    }
    return r.code;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace frobound::cli
