#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "antf/budget.hpp"
#include "antf/ideal.hpp"

namespace antf {

struct AssOptions {
  unsigned threads = 1;
  const Budget* budget = nullptr;
};

/// Minimal transversals of the generator supports, i.e. Min(I).
/// Throws InvalidArgument for the zero or unit ideal.
PrimeSet minimal_primes(const MonomialIdeal& I);

/// A monomial u outside J with x_i u in J for every variable x_i of the
/// ambient ring, if one exists. Such a u exists iff the maximal ideal is
/// associated to J.
std::optional<Monomial> socle_witness(const MonomialIdeal& J, const Budget* budget = nullptr);

/// Same criterion over the variables of V only; J must not involve other
/// variables (typically J = localize(I, V)).
std::optional<Monomial> socle_witness(const MonomialIdeal& J, const MonomialPrime& V,
                                      const Budget* budget = nullptr);

/// Ass(I): every prime P covering all generator supports such that the
/// localization I_P has a socle witness over P.
PrimeSet associated_primes(const MonomialIdeal& I, const AssOptions& opts = {});

/// Irredundant decomposition of I into ideals generated by pure powers,
/// obtained by repeatedly splitting (I, x_i^a m) = (I, x_i^a) ∩ (I, m).
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I,
                                                     const Budget* budget = nullptr);

/// Distinct radicals of the given components.
PrimeSet component_radicals(const std::vector<MonomialIdeal>& components);

enum class Classification { NTF, ANTF, NOT_ANTF, ORACLE_ONLY };

std::string_view to_string(Classification c);

/// Verdict read off finitely many powers. Never absolute: "NTF" means
/// Ass(I^k) = Min(I) for every computed k, and so on.
struct PowersVerdict {
  Classification classification = Classification::ORACLE_ONLY;
  /// ANTF only: last power at which Ass equals Min.
  std::optional<int> k_index;
  /// ANTF only: the single non-minimal prime seen.
  std::optional<MonomialPrime> extra_prime;
  /// NOT_ANTF only: every non-minimal prime seen.
  PrimeSet offending;
};

struct AssReport {
  MonomialIdeal ideal;
  PrimeSet min_primes;
  std::map<int, PrimeSet> powers;
  int kmax = 0;
  bool budget_exhausted = false;
  PowersVerdict verdict;

  int computed_through() const { return powers.empty() ? 0 : powers.rbegin()->first; }
};

PowersVerdict classify_powers(const PrimeSet& min_primes, const std::map<int, PrimeSet>& powers);

/// Ass(I^k) for k = 1..kmax. Stops early when the budget runs out and marks
/// the report; powers computed so far are kept.
AssReport ass_of_powers(const MonomialIdeal& I, int kmax, const AssOptions& opts = {});

/// Ass((I1 + I2)^k) for ideals in disjoint sets of variables, assembled from
/// Ass(I1^k1) and Ass(I2^k2) with k1 + k2 = k + 1.
PrimeSet split_ass(const MonomialIdeal& I1, const MonomialIdeal& I2, int k,
                   const AssOptions& opts = {});

}  // namespace antf
