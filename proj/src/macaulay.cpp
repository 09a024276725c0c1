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

#include "frobound/macaulay.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace frobound {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int variables, int index) {
  if (index < 0 || index >= variables) throw std::out_of_range("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.variables() != variables()) throw std::invalid_argument("variable count mismatch");
  std::vector<int> e = exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::scaled(int q) const {
  std::vector<int> e = exponents_;
  for (int& x : e) x *= q;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (other.variables() != variables()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? " " : "") << exponents_[i];
  return os.str();
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.exponents().size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(int variables, int degree) {
  if (variables < 1) throw std::invalid_argument("need at least one variable");
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  auto fill = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == e.size()) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  fill(fill, 0, degree);
  std::sort(out.begin(), out.end(), degrevlex_greater);
  return out;
}

MonomialBasis::MonomialBasis(int variables, int degree)
    : variables_(variables), degree_(degree), monomials_(monomials_of_degree(variables, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    throw std::out_of_range("monomial " + m.to_string() + " is not in the degree-" +
                            std::to_string(degree_) + " basis");
  }
  return it->second;
}

// -------------------------------------------------------------------- Form

Form::Form(int variables, int degree) : variables_(variables), degree_(degree) {
  if (variables < 1) throw std::invalid_argument("need at least one variable");
  if (degree < 0) throw std::invalid_argument("negative degree");
}

Form Form::monomial(const Monomial& m, PrimeField::Element c) {
  Form f(m.variables(), m.degree());
  if (c != 0) f.terms_.emplace(m, c);
  return f;
}

PrimeField::Element Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Form::add_term(const Monomial& m, PrimeField::Element c, const PrimeField& field) {
  if (m.variables() != variables_ || m.degree() != degree_) {
    throw std::invalid_argument("term " + m.to_string() + " does not match form of degree " +
                                std::to_string(degree_));
  }
  c %= field.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

ResidueVector Form::to_vector(const MonomialBasis& basis) const {
  if (basis.degree() != degree_ || basis.variables() != variables_) {
    throw std::invalid_argument("basis does not match form degree");
  }
  ResidueVector v = ResidueVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [m, c] : terms_) v(static_cast<Eigen::Index>(basis.index_of(m))) = c;
  return v;
}

Form add(const Form& f, const Form& g, const PrimeField& field) {
  if (f.degree() != g.degree() || f.variables() != g.variables()) {
    throw std::invalid_argument("cannot add forms of different degrees");
  }
  Form r = f;
  for (const auto& [m, c] : g.terms()) r.add_term(m, c, field);
  return r;
}

Form scale(const Form& f, PrimeField::Element c, const PrimeField& field) {
  Form r(f.variables(), f.degree());
  for (const auto& [m, x] : f.terms()) r.add_term(m, field.mul(x, c % field.modulus()), field);
  return r;
}

Form Form::shifted(const Monomial& mu) const {
  Form r(variables_, degree_ + mu.degree());
  // Multiplying by a monomial preserves degrevlex order, so terms stay distinct.
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mu, c);
  return r;
}

Form multiply(const Form& f, const Monomial& mu) { return f.shifted(mu); }

Form multiply(const Form& f, const Form& g, const PrimeField& field) {
  if (f.variables() != g.variables()) throw std::invalid_argument("variable count mismatch");
  Form r(f.variables(), f.degree() + g.degree());
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) r.add_term(m1 * m2, field.mul(c1, c2), field);
  }
  return r;
}

namespace {

bool is_power_of(long long q, std::uint32_t p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

Form frobenius_power(const Form& f, int q, const PrimeField& field) {
  if (!is_power_of(q, field.characteristic())) {
    throw std::invalid_argument(std::to_string(q) + " is not a power of the characteristic " +
                                std::to_string(field.characteristic()));
  }
  Form r(f.variables(), f.degree() * q);
  for (const auto& [m, c] : f.terms()) r.add_term(m.scaled(q), c, field);
  return r;
}

FormSystem::FormSystem(PrimeField f, int v, std::vector<Form> fs)
    : field(f), variables(v), forms(std::move(fs)) {
  if (v < 1) throw std::invalid_argument("need at least one variable");
  for (const auto& form : forms) {
    if (form.variables() != v) throw std::invalid_argument("form variable count mismatch");
    for (const auto& [m, c] : form.terms()) {
      if (c >= f.modulus()) throw std::invalid_argument("coefficient is not a canonical residue");
    }
  }
}

std::vector<int> FormSystem::degrees() const {
  std::vector<int> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.degree());
  return out;
}

// --------------------------------------------------------------------- RNG

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Accept x < bound * floor(2^64 / bound).
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

namespace {

Form draw_form(int variables, int degree, const PrimeField& field, SplitMix64& rng) {
  Form f(variables, degree);
  for (const auto& m : monomials_of_degree(variables, degree)) {
    f.add_term(m, static_cast<PrimeField::Element>(rng.uniform(field.modulus())), field);
  }
  return f;
}

}  // namespace

Form random_form(int variables, int degree, const PrimeField& field, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("random forms need degree >= 1");
  SplitMix64 rng(seed);
  return draw_form(variables, degree, field, rng);
}

FormSystem random_system(int variables, const std::vector<int>& degrees, const PrimeField& field,
                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  FormSystem sys(field, variables);
  for (int a : degrees) {
    if (a < 1) throw std::invalid_argument("random forms need degree >= 1");
    sys.forms.push_back(draw_form(variables, a, field, rng));
  }
  return sys;
}

// --------------------------------------------------------- Hilbert function

ResidueMatrix macaulay_matrix(const std::vector<Form>& forms, const MonomialBasis& basis) {
  std::vector<std::pair<const Form*, std::vector<Monomial>>> blocks;
  Eigen::Index rows = 0;
  for (const auto& f : forms) {
    if (f.variables() != basis.variables()) throw std::invalid_argument("variable count mismatch");
    if (f.degree() > basis.degree()) continue;
    auto shifts = monomials_of_degree(basis.variables(), basis.degree() - f.degree());
    rows += static_cast<Eigen::Index>(shifts.size());
    blocks.emplace_back(&f, std::move(shifts));
  }
  ResidueMatrix m = ResidueMatrix::Zero(rows, static_cast<Eigen::Index>(basis.size()));
  Eigen::Index r = 0;
  for (const auto& [f, shifts] : blocks) {
    for (const auto& mu : shifts) {
      for (const auto& [t, c] : f->terms()) {
        m(r, static_cast<Eigen::Index>(basis.index_of(t * mu))) = c;
      }
      ++r;
    }
  }
  return m;
}

long long hilbert_value(const FormSystem& system, int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  const MonomialBasis basis(system.variables, m);
  const ResidueMatrix mat = macaulay_matrix(system.forms, basis);
  return static_cast<long long>(basis.size()) - static_cast<long long>(fp_rank(mat, system.field));
}

HilbertTable hilbert_table(const FormSystem& system, int cutoff) {
  HilbertTable table;
  for (int m = 0; m <= cutoff; ++m) {
    const long long h = table.first_zero ? 0 : hilbert_value(system, m);
    table.values.push_back(h);
    if (h == 0 && !table.first_zero) table.first_zero = m;
  }
  return table;
}

long long first_inclusion_degree(const FormSystem& system) {
  const int d = system.variables - 1;
  const auto degrees = system.degrees();
  if (degrees.empty()) throw PreconditionError("ideal not primary: no generators");
  const long long window = std::accumulate(degrees.begin(), degrees.end(), 0LL) - d + 1;
  long long lo = *std::min_element(degrees.begin(), degrees.end());
  long long hi = window;
  if (hi < lo || hilbert_value(system, static_cast<int>(hi)) != 0) {
    throw PreconditionError("ideal not primary up to degree " + std::to_string(window));
  }
  // P_m inside I implies P_{m+1} inside I, so the vanishing set is an interval.
  while (lo < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (hilbert_value(system, static_cast<int>(mid)) == 0) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

FroebergCheckReport froeberg_check(const DegreeType& dt, const PrimeField& field, int trials,
                                   std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  FroebergCheckReport report{dt, field.modulus(), seed, {}, std::nullopt, {}, 0, 0.0};
  const int cutoff = static_cast<int>(dt.degree_sum() - dt.d() + 1);
  // Once H vanishes it stays zero, while F can turn positive again past m0
  // (e.g. d=3, n=6); the lower bound is therefore the series truncated at its
  // first non-positive coefficient, not the pointwise clip.
  const TruncatedSeries lower = truncate_at_first_nonpositive(froeberg_series(dt, cutoff));
  for (std::size_t m = 0; m < lower.size(); ++m) {
    report.predicted.push_back(static_cast<long long>(lower[m]));
    if (!report.predicted_first_zero && lower[m] == 0) {
      report.predicted_first_zero = static_cast<long long>(m);
    }
  }

  SplitMix64 seeds(seed);
  report.trials.resize(static_cast<std::size_t>(trials));
  for (auto& t : report.trials) t.seed = seeds.next();

  auto run = [&](std::size_t index) {
    FroebergTrial& t = report.trials[index];
    const FormSystem sys = random_system(dt.d() + 1, dt.degrees(), field, t.seed);
    const HilbertTable table = hilbert_table(sys, cutoff);
    t.hilbert = table.values;
    t.first_zero = table.first_zero;
    t.equal = true;
    for (int m = 0; m <= cutoff; ++m) {
      const auto i = static_cast<std::size_t>(m);
      if (t.hilbert[i] < report.predicted[i]) t.violations.push_back(m);
      if (t.hilbert[i] != report.predicted[i]) t.equal = false;
    }
  };

  const int pool = std::clamp(workers, 1, trials);
  if (pool == 1) {
    for (std::size_t i = 0; i < report.trials.size(); ++i) run(i);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < pool; ++w) {
      threads.emplace_back([&, w] {
        for (auto i = static_cast<std::size_t>(w); i < report.trials.size();
             i += static_cast<std::size_t>(pool)) {
          run(i);
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  std::size_t equal = 0;
  for (const auto& t : report.trials) {
    report.inequality_violations += t.violations.size();
    if (t.equal) ++equal;
  }
  report.equality_rate = static_cast<double>(equal) / static_cast<double>(trials);
  return report;
}

// -------------------------------------------------------------- Text format

std::string format_system(const FormSystem& system) {
  std::ostringstream os;
  os << "p=" << system.field.modulus() << " v=" << system.variables << '\n';
  for (const auto& f : system.forms) {
    os << f.degree() << ';';
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
      os << (first ? " " : ", ") << m.to_string() << ':' << c;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": expected integer, got '" +
                                token + "'");
  }
  return value;
}

}  // namespace

FormSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<FormSystem> sys;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (!sys) {
      std::istringstream header(s);
      std::string pt, vt;
      header >> pt >> vt;
      if (pt.rfind("p=", 0) != 0 || vt.rfind("v=", 0) != 0) {
        throw std::invalid_argument("line " + std::to_string(line) +
                                    ": expected header 'p=<prime> v=<variables>'");
      }
      const long long p = parse_integer(pt.substr(2), line);
      const long long v = parse_integer(vt.substr(2), line);
      if (p < 2 || p >= (1LL << 31)) throw std::invalid_argument("prime out of range");
      sys.emplace(PrimeField(static_cast<std::uint32_t>(p)), static_cast<int>(v));
      continue;
    }
    const auto semi = s.find(';');
    if (semi == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line) + ": missing ';' after degree");
    }
    const long long degree = parse_integer(trim(s.substr(0, semi)), line);
    Form f(sys->variables, static_cast<int>(degree));
    std::string rest = s.substr(semi + 1);
    std::istringstream terms(rest);
    std::string term;
    while (std::getline(terms, term, ',')) {
      term = trim(term);
      if (term.empty()) continue;
      const auto colon = term.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(line) + ": term '" + term +
                                    "' lacks ':coeff'");
      }
      std::istringstream exps(term.substr(0, colon));
      std::vector<int> e;
      std::string tok;
      while (exps >> tok) e.push_back(static_cast<int>(parse_integer(tok, line)));
      if (static_cast<int>(e.size()) != sys->variables) {
        throw std::invalid_argument("line " + std::to_string(line) + ": exponent vector '" +
                                    term.substr(0, colon) + "' has wrong length");
      }
      const long long c = parse_integer(trim(term.substr(colon + 1)), line);
      Monomial m(std::move(e));
      if (m.degree() != degree) {
        throw std::invalid_argument("line " + std::to_string(line) + ": term of degree " +
                                    std::to_string(m.degree()) + " in form of degree " +
                                    std::to_string(degree));
      }
      f.add_term(m, sys->field.reduce(c), sys->field);
    }
    sys->forms.push_back(std::move(f));
  }
  if (!sys) throw std::invalid_argument("empty form system: missing header");
  return *sys;
}

}  // namespace frobound
