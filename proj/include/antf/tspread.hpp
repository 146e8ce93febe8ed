#pragma once

#include <optional>
#include <vector>

#include "antf/assprimes.hpp"
#include "antf/ideal.hpp"

namespace antf {

/// B_t(u) for u = x_{i_1} ... x_{i_d} in n variables. Indices are 1-based,
/// strictly increasing, with consecutive gaps of at least t.
struct BorelSpec {
  std::size_t t = 1;
  std::size_t n = 0;
  std::vector<std::size_t> indices;

  std::size_t degree() const { return indices.size(); }
  /// Throws InvalidArgument unless u is t-spread inside 1..n.
  void validate() const;

  friend bool operator==(const BorelSpec&, const BorelSpec&) = default;
};

struct NormalizedSpec {
  BorelSpec spec;
  /// variable_map[j - 1] is the original index of new variable j.
  std::vector<std::size_t> variable_map;
  /// True when generate(spec), read back through variable_map, is the
  /// original ideal. Dropping the unused variables when i_1 < t only yields
  /// a principal i_1-spread Borel ideal in degree <= 2.
  bool exact = true;
};

/// Drops the unused variables i_1+1..t when i_1 < t and reindexes, giving an
/// i_1-spread spec; identity otherwise.
NormalizedSpec normalize(const BorelSpec& spec);

/// G(B_t(u)): all t-spread x_{j_1}...x_{j_d} with j_l <= i_l.
MonomialIdeal generate(const BorelSpec& spec);

/// Every prime of the three admissible shapes; a superset of Ass(B_t(u)).
/// Requires i_d = n.
PrimeSet candidate_ass(const BorelSpec& spec);

struct BorelVerdict {
  Classification classification = Classification::ORACLE_ONLY;
  std::optional<int> k_index;
  /// ANTF: the prime that joins Min from power k_index + 1 on.
  std::optional<MonomialPrime> extra_prime;
  /// NOT_ANTF in degree 3: primes in Ass(I^2) \ Ass(I).
  PrimeSet obstruction_primes;
};

/// Degree 2, i_1 >= t, i_2 = n: NTF iff i_1 = t, ANTF with the maximal
/// ideal otherwise.
BorelVerdict classify_deg2(const BorelSpec& spec);

/// Degree 3, i_1 >= t, i_3 = n: NTF iff u = x_t x_{2t} x_n, otherwise
/// neither NTF nor ANTF.
BorelVerdict classify_deg3(const BorelSpec& spec);

/// Membership of v in B_t(x_t x_{2t} x_n)^k by greedy chain matching: take
/// the k smallest indices in [1,t], match each in turn to the smallest free
/// index in [j+t, 2t], then each of those to the smallest free index >= j+t.
bool fast_membership_t2t(const BorelSpec& spec, const Monomial& v, int k);

/// At least k variables (with multiplicity) in each of [1,t], [t+1,2t] and
/// [2t+1,n]. Necessary for membership in B_t(x_t x_{2t} x_n)^k; sufficient
/// only when t = 1.
bool window_condition_t2t(const BorelSpec& spec, const Monomial& v, int k);

/// Ideal over `n` variables obtained by renaming variable j to map[j - 1].
MonomialIdeal pull_back(const MonomialIdeal& I, const std::vector<std::size_t>& map, std::size_t n);
MonomialPrime pull_back(const MonomialPrime& P, const std::vector<std::size_t>& map, std::size_t n);

}  // namespace antf
