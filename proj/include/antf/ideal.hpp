#pragma once

#include <span>
#include <string>
#include <vector>

#include "antf/monomial.hpp"

namespace antf {

/// A monomial ideal stored by its minimal generating set G(I), sorted
/// lexicographically on exponent vectors. No generators means the zero ideal;
/// the unit monomial as sole generator means the unit ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}
  /// Minimalizes `gens`; every generator must live over `n` variables.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;

  Monomial lcm() const;
  /// Variables (1-based) dividing at least one generator.
  std::vector<std::size_t> support() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

bool member(const Monomial& u, const MonomialIdeal& I);
/// J ⊆ I.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k for k >= 1, built as minimalize(I^{k-1} * I).
MonomialIdeal power(const MonomialIdeal& I, int k);
/// Every power I^1..I^kmax, reusing each step.
std::vector<MonomialIdeal> powers(const MonomialIdeal& I, int kmax);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);
/// Sets every variable outside P to 1. The ambient is unchanged; the result
/// only involves variables of P.
MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& P);
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
bool ideal_equal(const MonomialIdeal& I, const MonomialIdeal& J);

/// The ideal generated by the variables of P.
MonomialIdeal prime_ideal(const MonomialPrime& P);
/// Support of the radical of a primary monomial ideal, i.e. the variables
/// of I when I is generated by pure powers.
MonomialPrime radical_prime(const MonomialIdeal& I);

std::string to_string(const MonomialIdeal& I);

}  // namespace antf
