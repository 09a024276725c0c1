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

// Graded pieces of R = P/J and membership of elements (and their Frobenius
// powers) in extended ideals I R.
//
// Everything is decided in P at a single degree: since I and J are
// homogeneous, the preimage of (I R)_m in P_m is (I + J)_m, so f lies in I R
// exactly when appending f to the degree-m Macaulay rows of I and J does not
// raise their rank.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frobound/bounds.hpp"
#include "frobound/macaulay.hpp"

namespace frobound {

class GradedQuotient {
 public:
  explicit GradedQuotient(FormSystem modulus);

  const PrimeField& field() const { return modulus_.field; }
  int variables() const { return modulus_.variables; }
  const FormSystem& modulus() const { return modulus_; }

  /// Echelon basis of J_m over the degrevlex basis of P_m. Cached; safe to
  /// call from several threads.
  const RowEchelon& relations_at(int m) const;

  /// Monomials of P_m that are not leading monomials of J_m. Their images
  /// form a basis of R_m.
  std::vector<Monomial> standard_monomials(int m) const;

 private:
  FormSystem modulus_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const RowEchelon>> cache_;
};

/// dim_k R_m.
long long ring_dimension_at(const GradedQuotient& ring, int m);

struct MembershipVerdict {
  bool contained = false;
  int degree = 0;
  long long rank_without = 0;
  long long rank_with = 0;
};

/// (I + J)_m in echelon form, for repeated membership queries at degree m.
class IdealSlice {
 public:
  IdealSlice(const GradedQuotient& ring, const FormSystem& ideal, int degree);

  int degree() const { return basis_.degree(); }
  long long rank() const { return static_cast<long long>(echelon_.rank()); }
  /// True when the slice is all of P_m.
  bool is_full() const { return rank() == static_cast<long long>(basis_.size()); }
  MembershipVerdict test(const Form& f) const;

 private:
  MonomialBasis basis_;
  RowEchelon echelon_;
};

MembershipVerdict ideal_membership(const GradedQuotient& ring, const FormSystem& ideal,
                                   const Form& f);

/// I^[q] = (f_1^q, ..., f_n^q); q must be a power of the characteristic.
FormSystem frobenius_power_ideal(const FormSystem& ideal, long long q);

/// Whether f^q lies in I^[q] R.
MembershipVerdict frobenius_membership(const GradedQuotient& ring, const FormSystem& ideal,
                                       const Form& f, long long q);

struct TightScanReport {
  std::vector<long long> q_list;
  std::vector<Form> witnesses;
  /// verdicts[u][k]: whether witnesses[u] * f^q_list[k] lies in I^[q] R.
  std::vector<std::vector<MembershipVerdict>> verdicts;
  std::vector<std::size_t> passing_witnesses;
  bool some_witness_passes = false;
};

/// Evidence (never a certificate) for f in I*: looks for a witness u with
/// u f^q in I^[q] R for every listed q.
TightScanReport tight_witness_scan(const GradedQuotient& ring, const FormSystem& ideal,
                                   const Form& f, const std::vector<Form>& witnesses,
                                   const std::vector<long long>& q_list);

/// Every monomial of degree <= max_degree. In a domain any nonzero element
/// avoids the only minimal prime, so each qualifies as a witness.
std::vector<Form> default_witness_pool(int variables, int max_degree = 2);

struct ElementVerdict {
  Monomial element;
  bool contained = false;
};

struct TheoremCReport {
  DegreeType degree_type;
  long long a_invariant = 0;
  long long m0 = 0;
  long long bound_degree = 0;
  std::uint64_t seed = 0;
  int draws = 0;
  std::vector<ElementVerdict> elements;
  bool passed = false;
  std::optional<FormSystem> ideal;
};

/// Draws generic forms of degree type dt in the Cohen-Macaulay complete
/// intersection `ring` (dim ring = d + 1) and checks that every standard
/// monomial of degree m0 + d + 1 + a_invariant lies in the ideal they
/// generate. Draws whose ideal is not R_+-primary are replaced, at most
/// `max_draws` times.
TheoremCReport verify_theorem_c(const GradedQuotient& ring, const DegreeType& dt,
                                long long a_invariant, std::uint64_t seed, int max_draws = 8);

struct FrobeniusElementVerdict {
  Monomial element;
  /// Smallest tested q with element^q in I^[q] R; empty when unresolved.
  std::optional<long long> smallest_q;
};

struct TheoremBReport {
  DegreeType degree_type;
  long long m0 = 0;
  long long bound_degree = 0;
  long long q_max = 0;
  std::vector<long long> q_tested;
  std::vector<FrobeniusElementVerdict> elements;
  std::size_t resolved = 0;
  bool all_resolved = false;
  std::optional<std::uint64_t> seed;
  FormSystem ideal;
};

/// Powers 1, p, p^2, ... up to q_max, stopping before binom(q m + v - 1, v - 1)
/// exceeds `row_cap`.
std::vector<long long> frobenius_exponents(const PrimeField& field, long long q_max, int degree,
                                           int variables, long long row_cap = 100000);

/// For every standard monomial b of degree m0 + d + 1 (d = dim ring - 1),
/// the smallest q <= q_max with b^q in I^[q] R.
TheoremBReport verify_theorem_b(const GradedQuotient& ring, const FormSystem& ideal,
                                long long q_max);
TheoremBReport verify_theorem_b(const GradedQuotient& ring, const DegreeType& dt,
                                long long q_max, std::uint64_t seed);

/// A named ring with the hypotheses the verifications rely on (normal,
/// Cohen-Macaulay complete intersection) holding by construction.
struct Fixture {
  std::string name;
  std::string description;
  GradedQuotient ring;
  int d = 0;
  long long a_invariant = 0;
  /// (x_0, ..., x_d): a system of parameters.
  FormSystem parameter_ideal;
};

std::vector<std::string> fixture_names();

/// polynomial:      F_p[x_0..x_d], a = -d - 1 (p = 32003 unless given)
/// fermat-cubic:    F_32003[x,y,z]/(x^3+y^3+z^3), a = 0
/// fermat-cubic-p2: the same over F_2, fermat-cubic-p5 over F_5, -p7 over F_7
/// fermat-quartic:  F_32003[x,y,z]/(x^4+y^4+z^4), a = 1
std::unique_ptr<Fixture> make_fixture(const std::string& name, int d = 2,
                                      std::optional<std::uint32_t> prime = std::nullopt);

}  // namespace frobound
