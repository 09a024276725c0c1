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

// Homogeneous forms over F_p and the Hilbert function of the ideal they
// generate, computed degree by degree as dim P_m - rank of the Macaulay matrix
// whose rows are the products mu * f_i with deg mu = m - deg f_i.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobound/arith.hpp"
#include "frobound/fp_linalg.hpp"
#include "frobound/froeberg.hpp"

namespace frobound {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int variables) { return Monomial(std::vector<int>(static_cast<std::size_t>(variables), 0)); }
  static Monomial variable(int variables, int index);

  int variables() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }

  Monomial operator*(const Monomial& other) const;
  /// Every exponent multiplied by q.
  Monomial scaled(int q) const;
  bool divides(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded reverse lexicographic order: higher degree first; within a degree,
/// the monomial with the smaller exponent in the last differing variable wins.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

struct DegrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree m in v variables, largest first.
std::vector<Monomial> monomials_of_degree(int variables, int degree);

/// Monomials of one degree with O(1) position lookup.
class MonomialBasis {
 public:
  MonomialBasis(int variables, int degree);
  int variables() const { return variables_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Throws std::out_of_range for a monomial of another degree.
  std::size_t index_of(const Monomial& m) const;

 private:
  int variables_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// A homogeneous polynomial with coefficients in some F_p. Terms are kept in
/// descending degrevlex order; zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<Monomial, PrimeField::Element, DegrevlexDescending>;

  Form(int variables, int degree);
  static Form monomial(const Monomial& m, PrimeField::Element c = 1);

  int variables() const { return variables_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PrimeField::Element coefficient(const Monomial& m) const;

  /// Adds c * m; the monomial must have this form's degree.
  void add_term(const Monomial& m, PrimeField::Element c, const PrimeField& field);

  /// This form times the monomial mu.
  Form shifted(const Monomial& mu) const;

  /// Coefficient vector in the given basis of the same degree.
  ResidueVector to_vector(const MonomialBasis& basis) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  int variables_;
  int degree_;
  Terms terms_;
};

Form add(const Form& f, const Form& g, const PrimeField& field);
Form scale(const Form& f, PrimeField::Element c, const PrimeField& field);
Form multiply(const Form& f, const Monomial& m);
Form multiply(const Form& f, const Form& g, const PrimeField& field);
/// f^q for q a power of the characteristic: exponents scale by q and
/// coefficients are unchanged because c^p = c in F_p.
Form frobenius_power(const Form& f, int q, const PrimeField& field);

/// n forms over one field in one set of variables.
struct FormSystem {
  PrimeField field;
  int variables;
  std::vector<Form> forms;

  FormSystem(PrimeField f, int v, std::vector<Form> fs = {});
  std::vector<int> degrees() const;
  friend bool operator==(const FormSystem&, const FormSystem&) = default;
};

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by the golden
/// gamma 0x9E3779B97F4A7C15, output mixed by two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection of the biased top range.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Dense form with i.i.d. uniform coefficients, one draw per monomial in
/// descending degrevlex order.
Form random_form(int variables, int degree, const PrimeField& field, std::uint64_t seed);

/// One form per degree, drawn from a single generator seeded with `seed`.
FormSystem random_system(int variables, const std::vector<int>& degrees, const PrimeField& field,
                         std::uint64_t seed);

/// Rows mu * f for each form of degree <= m and each monomial mu of degree
/// m - deg f, columns indexed by `basis`.
ResidueMatrix macaulay_matrix(const std::vector<Form>& forms, const MonomialBasis& basis);

long long hilbert_value(const FormSystem& system, int m);

struct HilbertTable {
  std::vector<long long> values;
  std::optional<long long> first_zero;
};

/// H(0..cutoff). Once H reaches zero it stays zero, so later degrees are not
/// recomputed.
HilbertTable hilbert_table(const FormSystem& system, int cutoff);

/// min{m : H(m) = 0}, searched up to sum(a) - d + 1 with d = v - 1. Throws
/// PreconditionError when the ideal is not primary within that window.
long long first_inclusion_degree(const FormSystem& system);

struct FroebergTrial {
  std::uint64_t seed = 0;
  std::vector<long long> hilbert;
  std::optional<long long> first_zero;
  bool equal = false;
  /// Degrees where H(m) < F+(m).
  std::vector<int> violations;
};

struct FroebergCheckReport {
  DegreeType degree_type;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<long long> predicted;  // F+(0..cutoff), truncated at m0
  std::optional<long long> predicted_first_zero;
  std::vector<FroebergTrial> trials;
  std::size_t inequality_violations = 0;
  double equality_rate = 0.0;
};

/// Draws `trials` random systems of degree type `dt` in d + 1 variables and
/// compares their Hilbert functions with F+ (truncated after its first
/// non-positive value) on 0 <= m <= sum(a) - d + 1.
/// Trial t uses the t-th output of SplitMix64(seed) as its seed; the report
/// does not depend on `workers`.
FroebergCheckReport froeberg_check(const DegreeType& dt, const PrimeField& field, int trials,
                                   std::uint64_t seed, int workers = 1);

// Text format:
//   p=<prime> v=<variables>
//   <degree>; <e_1 ... e_v>:<coeff>, <e_1 ... e_v>:<coeff>, ...
// one line per form, terms in descending degrevlex order, coefficients as
// canonical residues. Blank lines and lines starting with '#' are ignored.
std::string format_system(const FormSystem& system);
FormSystem parse_system(const std::string& text);

}  // namespace frobound
