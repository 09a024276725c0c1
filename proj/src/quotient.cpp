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

#include "frobound/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace frobound {

namespace {

ResidueMatrix stack_rows(const ResidueMatrix& top, const ResidueMatrix& bottom) {
  ResidueMatrix m(top.rows() + bottom.rows(), std::max(top.cols(), bottom.cols()));
  if (top.rows() > 0) m.topRows(top.rows()) = top;
  if (bottom.rows() > 0) m.bottomRows(bottom.rows()) = bottom;
  return m;
}

void require_compatible(const GradedQuotient& ring, const FormSystem& ideal) {
  if (!(ideal.field == ring.field())) {
    throw std::invalid_argument("ideal and ring live over different prime fields");
  }
  if (ideal.variables != ring.variables()) {
    throw std::invalid_argument("ideal and ring have different variable counts");
  }
}

bool is_power_of(long long q, std::uint32_t p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

// ---------------------------------------------------------- GradedQuotient

GradedQuotient::GradedQuotient(FormSystem modulus) : modulus_(std::move(modulus)) {}

const RowEchelon& GradedQuotient::relations_at(int m) const {
  if (m < 0) throw std::invalid_argument("negative degree");
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(m);
  if (it == cache_.end()) {
    const MonomialBasis basis(variables(), m);
    auto echelon =
        std::make_shared<const RowEchelon>(macaulay_matrix(modulus_.forms, basis), field());
    it = cache_.emplace(m, std::move(echelon)).first;
  }
  return *it->second;
}

std::vector<Monomial> GradedQuotient::standard_monomials(int m) const {
  const auto monomials = monomials_of_degree(variables(), m);
  const auto& pivots = relations_at(m).pivot_columns();
  std::vector<bool> leading(monomials.size(), false);
  for (auto c : pivots) leading[static_cast<std::size_t>(c)] = true;
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (!leading[i]) out.push_back(monomials[i]);
  }
  return out;
}

long long ring_dimension_at(const GradedQuotient& ring, int m) {
  return static_cast<long long>(binom(m + ring.variables() - 1, ring.variables() - 1)) -
         static_cast<long long>(ring.relations_at(m).rank());
}

// ------------------------------------------------------------- Membership

IdealSlice::IdealSlice(const GradedQuotient& ring, const FormSystem& ideal, int degree)
    : basis_(ring.variables(), degree),
      echelon_(stack_rows(macaulay_matrix(ideal.forms, basis_),
                          macaulay_matrix(ring.modulus().forms, basis_)),
               ring.field()) {
  require_compatible(ring, ideal);
}

MembershipVerdict IdealSlice::test(const Form& f) const {
  if (f.degree() != degree() || f.variables() != basis_.variables()) {
    throw std::invalid_argument("form of degree " + std::to_string(f.degree()) +
                                " tested against ideal slice of degree " +
                                std::to_string(degree()));
  }
  MembershipVerdict v;
  v.degree = degree();
  v.rank_without = rank();
  v.contained = echelon_.contains(f.to_vector(basis_));
  v.rank_with = v.rank_without + (v.contained ? 0 : 1);
  return v;
}

MembershipVerdict ideal_membership(const GradedQuotient& ring, const FormSystem& ideal,
                                   const Form& f) {
  require_compatible(ring, ideal);
  return IdealSlice(ring, ideal, f.degree()).test(f);
}

FormSystem frobenius_power_ideal(const FormSystem& ideal, long long q) {
  if (!is_power_of(q, ideal.field.characteristic())) {
    throw std::invalid_argument(std::to_string(q) + " is not a power of the characteristic " +
                                std::to_string(ideal.field.characteristic()));
  }
  FormSystem out(ideal.field, ideal.variables);
  for (const auto& f : ideal.forms) {
    out.forms.push_back(frobenius_power(f, static_cast<int>(q), ideal.field));
  }
  return out;
}

MembershipVerdict frobenius_membership(const GradedQuotient& ring, const FormSystem& ideal,
                                       const Form& f, long long q) {
  require_compatible(ring, ideal);
  const FormSystem bracket = frobenius_power_ideal(ideal, q);
  return ideal_membership(ring, bracket, frobenius_power(f, static_cast<int>(q), ring.field()));
}

TightScanReport tight_witness_scan(const GradedQuotient& ring, const FormSystem& ideal,
                                   const Form& f, const std::vector<Form>& witnesses,
                                   const std::vector<long long>& q_list) {
  require_compatible(ring, ideal);
  TightScanReport report{q_list, witnesses, {}, {}, false};
  report.verdicts.assign(witnesses.size(), {});
  for (std::size_t k = 0; k < q_list.size(); ++k) {
    const long long q = q_list[k];
    const FormSystem bracket = frobenius_power_ideal(ideal, q);
    const Form fq = frobenius_power(f, static_cast<int>(q), ring.field());
    // One slice per target degree; witnesses of equal degree share it.
    std::map<int, std::unique_ptr<IdealSlice>> slices;
    for (std::size_t u = 0; u < witnesses.size(); ++u) {
      if (witnesses[u].is_zero()) throw std::invalid_argument("tight closure witnesses must be nonzero");
      const Form target = multiply(witnesses[u], fq, ring.field());
      auto& slice = slices[target.degree()];
      if (!slice) slice = std::make_unique<IdealSlice>(ring, bracket, target.degree());
      report.verdicts[u].push_back(slice->test(target));
    }
  }
  for (std::size_t u = 0; u < witnesses.size(); ++u) {
    const auto& row = report.verdicts[u];
    if (std::all_of(row.begin(), row.end(), [](const auto& v) { return v.contained; })) {
      report.passing_witnesses.push_back(u);
    }
  }
  report.some_witness_passes = !report.passing_witnesses.empty();
  return report;
}

std::vector<Form> default_witness_pool(int variables, int max_degree) {
  std::vector<Form> pool;
  for (int k = 0; k <= max_degree; ++k) {
    for (const auto& m : monomials_of_degree(variables, k)) pool.push_back(Form::monomial(m));
  }
  return pool;
}

// ------------------------------------------------------------ Verification

namespace {

int ring_dimension(const GradedQuotient& ring) {
  // Complete intersections only: every relation cuts the dimension by one.
  return ring.variables() - static_cast<int>(ring.modulus().forms.size());
}

long long top_degree_sum(const DegreeType& dt) {
  const auto& a = dt.degrees();
  return std::accumulate(a.begin(), a.begin() + std::min(dt.n(), dt.d() + 1), 0LL);
}

}  // namespace

TheoremCReport verify_theorem_c(const GradedQuotient& ring, const DegreeType& dt,
                                long long a_invariant, std::uint64_t seed, int max_draws) {
  if (ring_dimension(ring) != dt.d() + 1) {
    throw PreconditionError("degree type has d=" + std::to_string(dt.d()) +
                            " but the ring has dimension " + std::to_string(ring_dimension(ring)));
  }
  if (max_draws < 1) throw std::invalid_argument("max_draws must be >= 1");
  TheoremCReport report{dt, a_invariant, smallest_zero(dt), 0, seed, 0, {}, false, std::nullopt};
  report.bound_degree = report.m0 + dt.d() + 1 + a_invariant;
  if (report.bound_degree < 0) throw PreconditionError("bound degree is negative");
  const int bound = static_cast<int>(report.bound_degree);

  // Degree past which a primary ideal in this complete intersection must
  // contain all of P: the socle degree of (f_1..f_{d+1}, J) plus one.
  const auto relation_degrees = ring.modulus().degrees();
  const long long primary_degree =
      top_degree_sum(dt) + std::accumulate(relation_degrees.begin(), relation_degrees.end(), 0LL) -
      ring.variables() + 1;

  const auto basis_elements = ring.standard_monomials(bound);
  SplitMix64 seeds(seed);
  for (int draw = 1; draw <= max_draws; ++draw) {
    report.draws = draw;
    FormSystem ideal = random_system(ring.variables(), dt.degrees(), ring.field(), seeds.next());
    const IdealSlice slice(ring, ideal, bound);
    report.elements.clear();
    bool all = true;
    for (const auto& b : basis_elements) {
      const bool in = slice.test(Form::monomial(b)).contained;
      report.elements.push_back({b, in});
      all = all && in;
    }
    if (all) {
      report.passed = true;
      report.ideal = std::move(ideal);
      return report;
    }
    const bool primary =
        primary_degree >= 0 && IdealSlice(ring, ideal, static_cast<int>(primary_degree)).is_full();
    if (primary) {
      report.ideal = std::move(ideal);
      return report;  // genuine failure of the inclusion
    }
  }
  return report;
}

std::vector<long long> frobenius_exponents(const PrimeField& field, long long q_max, int degree,
                                           int variables, long long row_cap) {
  std::vector<long long> qs;
  for (long long q = 1; q <= q_max; q *= field.characteristic()) {
    if (binom(q * degree + variables - 1, variables - 1) > row_cap) break;
    qs.push_back(q);
  }
  return qs;
}

TheoremBReport verify_theorem_b(const GradedQuotient& ring, const FormSystem& ideal,
                                long long q_max) {
  require_compatible(ring, ideal);
  const int d = ring_dimension(ring) - 1;
  const DegreeType dt(d, ideal.degrees());
  TheoremBReport report{dt, smallest_zero(dt), 0, q_max, {}, {}, 0, false, std::nullopt, ideal};
  report.bound_degree = report.m0 + d + 1;
  const int bound = static_cast<int>(report.bound_degree);
  report.q_tested = frobenius_exponents(ring.field(), q_max, bound, ring.variables());

  for (const auto& b : ring.standard_monomials(bound)) report.elements.push_back({b, std::nullopt});
  for (long long q : report.q_tested) {
    if (report.resolved == report.elements.size()) break;
    const FormSystem bracket = q == 1 ? ideal : frobenius_power_ideal(ideal, q);
    const IdealSlice slice(ring, bracket, static_cast<int>(q * bound));
    for (auto& e : report.elements) {
      if (e.smallest_q) continue;
      if (slice.test(Form::monomial(e.element.scaled(static_cast<int>(q)))).contained) {
        e.smallest_q = q;
        ++report.resolved;
      }
    }
  }
  report.all_resolved = report.resolved == report.elements.size();
  return report;
}

TheoremBReport verify_theorem_b(const GradedQuotient& ring, const DegreeType& dt,
                                long long q_max, std::uint64_t seed) {
  if (ring_dimension(ring) != dt.d() + 1) {
    throw PreconditionError("degree type has d=" + std::to_string(dt.d()) +
                            " but the ring has dimension " + std::to_string(ring_dimension(ring)));
  }
  SplitMix64 seeds(seed);
  TheoremBReport report =
      verify_theorem_b(ring, random_system(ring.variables(), dt.degrees(), ring.field(), seeds.next()),
                       q_max);
  report.seed = seed;
  return report;
}

// ---------------------------------------------------------------- Fixtures

std::vector<std::string> fixture_names() {
  return {"polynomial",      "fermat-cubic",    "fermat-cubic-p2",
          "fermat-cubic-p5", "fermat-cubic-p7", "fermat-quartic"};
}

namespace {

Form fermat(int degree, const PrimeField& field) {
  Form h(3, degree);
  for (int i = 0; i < 3; ++i) h.add_term(Monomial::variable(3, i).scaled(degree), 1, field);
  return h;
}

FormSystem parameters(const PrimeField& field, int variables, int count) {
  FormSystem sys(field, variables);
  for (int i = 0; i < count; ++i) sys.forms.push_back(Form::monomial(Monomial::variable(variables, i)));
  return sys;
}

}  // namespace

std::unique_ptr<Fixture> make_fixture(const std::string& name, int d,
                                      std::optional<std::uint32_t> prime) {
  if (name == "polynomial") {
    if (d < 1) throw std::invalid_argument("polynomial fixture needs d >= 1");
    const PrimeField field(prime.value_or(32003));
    return std::unique_ptr<Fixture>(new Fixture{
        name, "F_p[x_0..x_d], the polynomial ring itself",
        GradedQuotient(FormSystem(field, d + 1)), d, -(d + 1), parameters(field, d + 1, d + 1)});
  }
  struct Hypersurface {
    const char* name;
    int degree;
    std::uint32_t prime;
  };
  static const Hypersurface kHypersurfaces[] = {
      {"fermat-cubic", 3, 32003}, {"fermat-cubic-p2", 3, 2}, {"fermat-cubic-p5", 3, 5},
      {"fermat-cubic-p7", 3, 7},  {"fermat-quartic", 4, 32003},
  };
  for (const auto& h : kHypersurfaces) {
    if (name != h.name) continue;
    const PrimeField field(prime.value_or(h.prime));
    // x^e + y^e + z^e is smooth exactly when p does not divide e.
    if (h.degree % static_cast<int>(field.characteristic()) == 0) {
      throw std::invalid_argument(name + " is singular in characteristic " +
                                  std::to_string(field.characteristic()));
    }
    FormSystem relation(field, 3, {fermat(h.degree, field)});
    const std::string description = "F_" + std::to_string(field.characteristic()) +
                                    "[x,y,z]/(x^" + std::to_string(h.degree) + "+y^" +
                                    std::to_string(h.degree) + "+z^" + std::to_string(h.degree) + ")";
    return std::unique_ptr<Fixture>(new Fixture{
        name, description, GradedQuotient(std::move(relation)), 1,
        complete_intersection_a_invariant({h.degree}, 3), parameters(field, 3, 2)});
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace frobound
