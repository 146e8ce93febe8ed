#include "antf/assprimes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "antf/error.hpp"

namespace antf {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxEnumeratedVariables = 30;

void require_proper_nonzero(const MonomialIdeal& I, std::string_view op) {
  if (I.is_zero()) throw InvalidArgument(std::string(op) + ": zero ideal");
  if (I.is_unit()) throw InvalidArgument(std::string(op) + ": unit ideal");
}

/// Generators restricted to a list of variable positions, flattened row-major.
struct DenseIdeal {
  std::size_t width = 0;
  std::vector<Exponent> rows;

  std::size_t count() const { return width ? rows.size() / width : 0; }

  bool contains(const Exponent* u) const {
    for (std::size_t g = 0, c = count(); g < c; ++g) {
      const Exponent* row = rows.data() + g * width;
      std::size_t i = 0;
      while (i < width && row[i] <= u[i]) ++i;
      if (i == width) return true;
    }
    return false;
  }
};

class WitnessSearch {
public:
  WitnessSearch(const DenseIdeal& J, std::vector<std::vector<Exponent>> choices, const Budget* budget)
      : J_(J), choices_(std::move(choices)), budget_(budget), u_(J.width), probe_(J.width) {}

  bool run() { return descend(0); }
  const std::vector<Exponent>& witness() const { return u_; }

private:
  bool descend(std::size_t r) {
    const std::size_t m = J_.width;
    charge(budget_);
    if (r == m) {
      if (J_.contains(u_.data())) return false;
      for (std::size_t i = 0; i < m; ++i) {
        ++u_[i];
        const bool in = J_.contains(u_.data());
        --u_[i];
        if (!in) return false;
      }
      return true;
    }
    for (Exponent value : choices_[r]) {
      u_[r] = value;
      // Every completion dominates the lowest one.
      for (std::size_t i = 0; i <= r; ++i) probe_[i] = u_[i];
      for (std::size_t i = r + 1; i < m; ++i) probe_[i] = choices_[i].front();
      if (J_.contains(probe_.data())) break;

      // x_i u in J needs x_i times the highest completion in J.
      for (std::size_t i = r + 1; i < m; ++i) probe_[i] = choices_[i].back();
      bool feasible = true;
      for (std::size_t i = 0; i <= r && feasible; ++i) {
        ++probe_[i];
        feasible = J_.contains(probe_.data());
        --probe_[i];
      }
      if (feasible && descend(r + 1)) return true;
    }
    return false;
  }

  const DenseIdeal& J_;
  std::vector<std::vector<Exponent>> choices_;
  const Budget* budget_;
  std::vector<Exponent> u_;
  std::vector<Exponent> probe_;
};

Mask support_mask(const Monomial& g) {
  Mask m = 0;
  for (std::size_t i = 0; i < g.ambient(); ++i)
    if (g[i] > 0) m |= Mask{1} << i;
  return m;
}

MonomialPrime prime_from_mask(std::size_t n, Mask mask) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) vars.push_back(i + 1);
  return MonomialPrime(n, std::move(vars));
}

/// All subsets of `universe`, fewest elements first.
std::vector<Mask> subsets_by_cardinality(Mask universe) {
  std::vector<Mask> out;
  for (Mask s = universe;; s = (s - 1) & universe) {
    out.push_back(s);
    if (s == 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

Mask checked_support(const MonomialIdeal& I) {
  if (I.ambient() > kMaxEnumeratedVariables)
    throw InvalidArgument("prime enumeration supports at most " +
                          std::to_string(kMaxEnumeratedVariables) + " variables");
  Mask m = 0;
  for (const auto& g : I.generators()) m |= support_mask(g);
  return m;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

PrimeSet minimal_primes(const MonomialIdeal& I) {
  require_proper_nonzero(I, "minimal_primes");
  const Mask universe = checked_support(I);
  std::vector<Mask> edges;
  for (const auto& g : I.generators()) edges.push_back(support_mask(g));

  std::vector<Mask> found;
  for (Mask s : subsets_by_cardinality(universe)) {
    if (!std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & s) != 0; })) continue;
    if (std::any_of(found.begin(), found.end(), [&](Mask f) { return (f & s) == f; })) continue;
    found.push_back(s);
  }
  PrimeSet out;
  for (Mask f : found) out.push_back(prime_from_mask(I.ambient(), f));
  canonicalize(out);
  return out;
}

std::optional<Monomial> socle_witness(const MonomialIdeal& J, const Budget* budget) {
  return socle_witness(J, MonomialPrime::maximal(J.ambient()), budget);
}

std::optional<Monomial> socle_witness(const MonomialIdeal& J, const MonomialPrime& V,
                                      const Budget* budget) {
  if (V.ambient() != J.ambient()) throw AmbientMismatch(V.ambient(), J.ambient());
  if (J.is_zero() || J.is_unit()) return std::nullopt;
  for (std::size_t v : J.support())
    if (!V.contains(v)) throw InvalidArgument("socle_witness: ideal involves a variable outside V");

  const auto vars = V.variables();
  DenseIdeal dense{vars.size(), {}};
  dense.rows.reserve(J.size() * vars.size());
  for (const auto& g : J.generators())
    for (std::size_t v : vars) dense.rows.push_back(g[v - 1]);

  // x_i u in J while u is not forces a generator g with g_i = u_i + 1, so u_i
  // ranges over {g_i - 1 : g_i > 0}; in particular u divides lcm(G(J)).
  std::vector<std::vector<Exponent>> choices(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (const auto& g : J.generators())
      if (g[vars[i] - 1] > 0) choices[i].push_back(g[vars[i] - 1] - 1);
    if (choices[i].empty()) return std::nullopt;  // x_i is a nonzerodivisor
    std::sort(choices[i].begin(), choices[i].end());
    choices[i].erase(std::unique(choices[i].begin(), choices[i].end()), choices[i].end());
  }

  WitnessSearch search(dense, std::move(choices), budget);
  if (!search.run()) return std::nullopt;
  std::vector<Exponent> e(J.ambient(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i] - 1] = search.witness()[i];
  return Monomial(std::move(e));
}

PrimeSet associated_primes(const MonomialIdeal& I, const AssOptions& opts) {
  require_proper_nonzero(I, "associated_primes");
  const std::size_t n = I.ambient();
  const Mask universe = checked_support(I);
  std::vector<Mask> edges;
  for (const auto& g : I.generators()) edges.push_back(support_mask(g));

  std::vector<Mask> candidates;
  for (Mask s : subsets_by_cardinality(universe))
    if (std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & s) != 0; }))
      candidates.push_back(s);

  std::vector<char> associated(candidates.size(), 0);
  parallel_for(candidates.size(), opts.threads, [&](std::size_t idx) {
    const MonomialPrime P = prime_from_mask(n, candidates[idx]);
    const MonomialIdeal local = localize(I, P);
    if (local.support().size() != P.size()) return;
    associated[idx] = socle_witness(local, P, opts.budget).has_value();
  });

  PrimeSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (associated[i]) out.push_back(prime_from_mask(n, candidates[i]));
  canonicalize(out);
  return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I, const Budget* budget) {
  require_proper_nonzero(I, "irreducible_decomposition");
  const std::size_t n = I.ambient();

  std::set<std::vector<Monomial>> seen;
  std::vector<MonomialIdeal> leaves;
  std::vector<MonomialIdeal> stack{I};
  while (!stack.empty()) {
    MonomialIdeal J = std::move(stack.back());
    stack.pop_back();
    charge(budget);
    if (!seen.insert(J.generators()).second) continue;

    const auto& gens = J.generators();
    auto mixed = std::find_if(gens.begin(), gens.end(),
                              [](const Monomial& g) { return g.support().size() >= 2; });
    if (mixed == gens.end()) {
      leaves.push_back(std::move(J));
      continue;
    }
    const std::size_t var = mixed->support().front();
    std::vector<Exponent> pure(n, 0);
    pure[var - 1] = (*mixed)[var - 1];
    std::vector<Exponent> rest(mixed->exponents().begin(), mixed->exponents().end());
    rest[var - 1] = 0;

    stack.push_back(ideal_sum(J, MonomialIdeal(n, {Monomial(std::move(rest))})));
    stack.push_back(ideal_sum(J, MonomialIdeal(n, {Monomial(std::move(pure))})));
  }

  // Monomial ideals form a distributive lattice, so dropping every component
  // that contains another one leaves an irredundant intersection.
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j)
      redundant = i != j && contains(leaves[i], leaves[j]) && !(leaves[i] == leaves[j]);
    if (!redundant) out.push_back(leaves[i]);
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators() < b.generators();
  });
  return out;
}

PrimeSet component_radicals(const std::vector<MonomialIdeal>& components) {
  PrimeSet out;
  for (const auto& Q : components) out.push_back(radical_prime(Q));
  canonicalize(out);
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NTF: return "NTF";
    case Classification::ANTF: return "ANTF";
    case Classification::NOT_ANTF: return "NOT_ANTF";
    case Classification::ORACLE_ONLY: return "ORACLE_ONLY";
  }
  return "ORACLE_ONLY";
}

PowersVerdict classify_powers(const PrimeSet& min_primes, const std::map<int, PrimeSet>& powers) {
  PowersVerdict v;
  if (powers.empty()) return v;  // nothing computed, nothing to say
  std::optional<int> first_change;
  PrimeSet extras;
  for (const auto& [k, primes] : powers) {
    if (primes != min_primes && !first_change) first_change = k;
    for (const auto& p : primes)
      if (std::find(min_primes.begin(), min_primes.end(), p) == min_primes.end()) extras.push_back(p);
  }
  canonicalize(extras);

  if (!first_change) {
    v.classification = Classification::NTF;
  } else if (*first_change > 1 && extras.size() == 1) {
    v.classification = Classification::ANTF;
    v.k_index = *first_change - 1;
    v.extra_prime = extras.front();
  } else {
    // Either Ass(I) already has an embedded prime, or two distinct
    // non-minimal primes showed up.
    v.classification = Classification::NOT_ANTF;
    v.offending = extras;
  }
  return v;
}

AssReport ass_of_powers(const MonomialIdeal& I, int kmax, const AssOptions& opts) {
  require_proper_nonzero(I, "ass_of_powers");
  if (kmax < 1) throw InvalidArgument("kmax must be >= 1");
  if (I.ambient() > 0 && I == prime_ideal(MonomialPrime::maximal(I.ambient())))
    throw InvalidArgument("ass_of_powers: input is the maximal ideal");

  AssReport report;
  report.ideal = I;
  report.kmax = kmax;
  report.min_primes = minimal_primes(I);
  try {
    MonomialIdeal current = I;
    for (int k = 1; k <= kmax; ++k) {
      if (k > 1) current = product(current, I);
      report.powers[k] = associated_primes(current, opts);
    }
  } catch (const BudgetExceeded&) {
    report.budget_exhausted = true;
  }
  report.verdict = classify_powers(report.min_primes, report.powers);
  return report;
}

PrimeSet split_ass(const MonomialIdeal& I1, const MonomialIdeal& I2, int k, const AssOptions& opts) {
  if (I1.ambient() != I2.ambient()) throw AmbientMismatch(I1.ambient(), I2.ambient());
  if (k < 1) throw InvalidArgument("split_ass: k must be >= 1");
  const auto s1 = I1.support();
  const auto s2 = I2.support();
  std::vector<std::size_t> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
  if (!common.empty()) throw InvalidArgument("split_ass: variable blocks overlap");

  const auto p1 = powers(I1, k);
  const auto p2 = powers(I2, k);
  std::vector<PrimeSet> ass1, ass2;
  for (const auto& J : p1) ass1.push_back(associated_primes(J, opts));
  for (const auto& J : p2) ass2.push_back(associated_primes(J, opts));

  PrimeSet out;
  for (int k1 = 1; k1 <= k; ++k1) {
    const int k2 = k + 1 - k1;
    for (const auto& a : ass1[k1 - 1])
      for (const auto& b : ass2[k2 - 1]) {
        std::vector<std::size_t> vars(a.variables().begin(), a.variables().end());
        vars.insert(vars.end(), b.variables().begin(), b.variables().end());
        out.emplace_back(I1.ambient(), std::move(vars));
      }
  }
  canonicalize(out);
  return out;
}

}  // namespace antf
