#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace antf {

using Exponent = std::uint32_t;

/// Exponent vector over the ambient variables x_1, ..., x_n.
/// Position i stores the exponent of x_{i+1}; every public index that names a
/// variable (support, from_variables, exponent_of) is 1-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t n) { return Monomial(n); }
  /// Product of the listed variables; repeats raise the exponent.
  static Monomial from_variables(std::size_t n, std::span<const std::size_t> vars);
  static Monomial from_variables(std::size_t n, std::initializer_list<std::size_t> vars) {
    return from_variables(n, std::span<const std::size_t>(vars.begin(), vars.size()));
  }

  std::size_t ambient() const { return exps_.size(); }
  Exponent operator[](std::size_t pos) const { return exps_[pos]; }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent exponent_of(std::size_t var) const;

  std::uint64_t degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  std::vector<std::size_t> support() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
/// Throws Error on exponent overflow.
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / gcd(a, b).
Monomial strip(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Prime generated by a set of variables. Variables are 1-based and sorted.
class MonomialPrime {
public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t n, std::vector<std::size_t> vars);

  static MonomialPrime maximal(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::span<const std::size_t> variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  bool contains(std::size_t var) const;
  bool is_subset_of(const MonomialPrime& other) const;
  bool is_maximal() const { return vars_.size() == n_; }

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::size_t> vars_;
};

using PrimeSet = std::vector<MonomialPrime>;

std::string to_string(const MonomialPrime& p);
std::ostream& operator<<(std::ostream& os, const MonomialPrime& p);

/// Sorts and deduplicates.
void canonicalize(PrimeSet& primes);
bool is_subset(const PrimeSet& a, const PrimeSet& b);

}  // namespace antf
