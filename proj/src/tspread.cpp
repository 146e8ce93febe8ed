#include "antf/tspread.hpp"

#include <algorithm>
#include <functional>

#include "antf/error.hpp"
#include "antf/graph.hpp"

namespace antf {

void BorelSpec::validate() const {
  if (t < 1) throw InvalidArgument("t must be >= 1");
  if (indices.empty()) throw InvalidArgument("u must have at least one variable");
  if (indices.front() < 1 || indices.back() > n)
    throw InvalidArgument("index of u outside 1.." + std::to_string(n));
  for (std::size_t l = 1; l < indices.size(); ++l)
    if (indices[l] < indices[l - 1] + t)
      throw InvalidArgument("u is not " + std::to_string(t) + "-spread");
}

NormalizedSpec normalize(const BorelSpec& spec) {
  spec.validate();
  NormalizedSpec out;
  const std::size_t i1 = spec.indices.front();
  if (i1 >= spec.t) {
    out.spec = spec;
    out.variable_map.resize(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) out.variable_map[j] = j + 1;
    return out;
  }
  const std::size_t dropped = spec.t - i1;
  out.spec.t = i1;
  out.spec.n = spec.n - dropped;
  for (std::size_t j = 1; j <= spec.n; ++j)
    if (j <= i1 || j > spec.t) out.variable_map.push_back(j);
  for (std::size_t i : spec.indices) out.spec.indices.push_back(i <= i1 ? i : i - dropped);
  out.exact = spec.degree() <= 2;
  return out;
}

MonomialIdeal generate(const BorelSpec& spec) {
  spec.validate();
  const std::size_t d = spec.degree();
  std::vector<Monomial> gens;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t l, std::size_t lo) {
    if (l == d) {
      gens.push_back(Monomial::from_variables(spec.n, chosen));
      return;
    }
    for (std::size_t j = lo; j <= spec.indices[l]; ++j) {
      chosen.push_back(j);
      pick(l + 1, j + spec.t);
      chosen.pop_back();
    }
  };
  pick(0, 1);
  return MonomialIdeal(spec.n, std::move(gens));
}

namespace {

/// [1, j_1 - 1] ∪ [j_1 + t, j_2 - 1] ∪ ... ∪ [j_last + t, top].
MonomialPrime interval_prime(std::size_t n, std::size_t t, const std::vector<std::size_t>& js, std::size_t top) {
  std::vector<std::size_t> vars;
  std::size_t lo = 1;
  for (std::size_t j : js) {
    for (std::size_t v = lo; v < j; ++v) vars.push_back(v);
    lo = j + t;
  }
  for (std::size_t v = lo; v <= top; ++v) vars.push_back(v);
  return MonomialPrime(n, std::move(vars));
}

/// Calls fn for every sequence j_1 < ... < j_len with j_l <= bounds[l] and
/// gaps >= t.
void for_each_spread(std::size_t len, std::size_t t, const std::vector<std::size_t>& bounds,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> js;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t l, std::size_t lo) {
    if (l == len) {
      fn(js);
      return;
    }
    for (std::size_t j = lo; j <= bounds[l]; ++j) {
      js.push_back(j);
      rec(l + 1, j + t);
      js.pop_back();
    }
  };
  rec(0, 1);
}

void require_degree(const BorelSpec& spec, std::size_t d) {
  if (spec.degree() != d)
    throw InvalidArgument("expected a degree " + std::to_string(d) + " spec, got degree " +
                          std::to_string(spec.degree()));
}

void require_normalized_tail(const BorelSpec& spec) {
  if (spec.indices.front() < spec.t)
    throw HypothesisViolation("i_1 < t", "normalize the spec first");
  if (spec.indices.back() != spec.n)
    throw HypothesisViolation("i_d != n", "the last index of u must equal n");
}

}  // namespace

PrimeSet candidate_ass(const BorelSpec& spec) {
  spec.validate();
  if (spec.indices.back() != spec.n)
    throw HypothesisViolation("i_d != n", "the last index of u must equal n");
  const std::size_t d = spec.degree();
  const std::size_t n = spec.n;
  const std::size_t t = spec.t;
  PrimeSet out;
  if (d >= 2)
    for_each_spread(d - 1, t, spec.indices,
                    [&](const auto& js) { out.push_back(interval_prime(n, t, js, n)); });
  out.push_back(interval_prime(n, t, {}, spec.indices.front()));
  for (std::size_t s = 2; s + 1 <= d; ++s)
    for_each_spread(s - 1, t, spec.indices,
                    [&](const auto& js) { out.push_back(interval_prime(n, t, js, spec.indices[s - 1])); });
  // Empty unions are not primes of a proper ideal.
  std::erase_if(out, [](const MonomialPrime& p) { return p.empty(); });
  canonicalize(out);
  return out;
}

BorelVerdict classify_deg2(const BorelSpec& spec) {
  spec.validate();
  require_degree(spec, 2);
  require_normalized_tail(spec);
  BorelVerdict v;
  if (spec.indices.front() == spec.t) {
    v.classification = Classification::NTF;
    return v;
  }
  // Degree 2 means I is an edge ideal; the stabilization index is read off
  // its odd girth.
  std::vector<Edge> edges;
  const MonomialIdeal I = generate(spec);
  for (const auto& g : I.generators()) {
    const auto s = g.support();
    edges.emplace_back(s[0], s[1]);
  }
  const GraphVerdict gv = classify_edge_ideal(Graph(spec.n, std::move(edges)));
  v.classification = Classification::ANTF;
  v.k_index = gv.k_index;
  v.extra_prime = MonomialPrime::maximal(spec.n);
  return v;
}

BorelVerdict classify_deg3(const BorelSpec& spec) {
  spec.validate();
  require_degree(spec, 3);
  require_normalized_tail(spec);
  const std::size_t t = spec.t;
  const std::size_t n = spec.n;
  BorelVerdict v;
  if (spec.indices[0] == t && spec.indices[1] == 2 * t) {
    v.classification = Classification::NTF;
    return v;
  }
  v.classification = Classification::NOT_ANTF;
  // i_1 >= t and i_2 - i_1 >= t leave i_2 >= 2t + 1 as the only other case.
  std::vector<std::size_t> p1, p2;
  for (std::size_t j = t + 1; j <= n; ++j) p1.push_back(j);
  for (std::size_t j = 1; j < t; ++j) p2.push_back(j);
  for (std::size_t j = 2 * t; j <= n; ++j) p2.push_back(j);
  v.obstruction_primes = {MonomialPrime(n, p1), MonomialPrime(n, p2)};
  canonicalize(v.obstruction_primes);
  return v;
}

namespace {

void require_t2t(const BorelSpec& spec) {
  spec.validate();
  const std::size_t t = spec.t;
  if (spec.degree() != 3 || spec.indices[0] != t || spec.indices[1] != 2 * t ||
      spec.indices[2] != spec.n)
    throw InvalidArgument("spec is not of the form x_t x_{2t} x_n");
}

}  // namespace

bool window_condition_t2t(const BorelSpec& spec, const Monomial& v, int k) {
  require_t2t(spec);
  if (v.ambient() != spec.n) throw AmbientMismatch(spec.n, v.ambient());
  const std::size_t t = spec.t;
  std::uint64_t low = 0, mid = 0, high = 0;
  for (std::size_t j = 1; j <= spec.n; ++j) {
    const auto e = v.exponent_of(j);
    (j <= t ? low : j <= 2 * t ? mid : high) += e;
  }
  const auto need = static_cast<std::uint64_t>(std::max(k, 0));
  return low >= need && mid >= need && high >= need;
}

bool fast_membership_t2t(const BorelSpec& spec, const Monomial& v, int k) {
  require_t2t(spec);
  if (v.ambient() != spec.n) throw AmbientMismatch(spec.n, v.ambient());
  if (k <= 0) return true;
  const std::size_t t = spec.t;
  // Available multiplicities per index; generators are chains
  // a <= t, a + t <= b <= 2t, c >= b + t.
  std::vector<std::uint64_t> avail(spec.n + 1, 0);
  for (std::size_t j = 1; j <= spec.n; ++j) avail[j] = v.exponent_of(j);

  auto take_smallest = [&](std::size_t lo, std::size_t hi) -> std::optional<std::size_t> {
    for (std::size_t j = lo; j <= hi; ++j)
      if (avail[j] > 0) {
        --avail[j];
        return j;
      }
    return std::nullopt;
  };

  std::vector<std::size_t> firsts;
  for (int c = 0; c < k; ++c) {
    auto a = take_smallest(1, t);
    if (!a) return false;
    firsts.push_back(*a);
  }
  // Nested neighbourhoods [a+t, 2t] make smallest-first matching optimal,
  // and it leaves the smallest possible middle indices for the last layer.
  std::vector<std::size_t> seconds;
  for (std::size_t a : firsts) {
    auto b = take_smallest(a + t, 2 * t);
    if (!b) return false;
    seconds.push_back(*b);
  }
  for (std::size_t b : seconds)
    if (!take_smallest(b + t, spec.n)) return false;
  return true;
}

MonomialIdeal pull_back(const MonomialIdeal& I, const std::vector<std::size_t>& map, std::size_t n) {
  if (map.size() != I.ambient()) throw InvalidArgument("variable map has the wrong size");
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t j = 0; j < map.size(); ++j) e[map[j] - 1] += g[j];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialPrime pull_back(const MonomialPrime& P, const std::vector<std::size_t>& map, std::size_t n) {
  if (map.size() != P.ambient()) throw InvalidArgument("variable map has the wrong size");
  std::vector<std::size_t> vars;
  for (std::size_t v : P.variables()) vars.push_back(map[v - 1]);
  return MonomialPrime(n, std::move(vars));
}

}  // namespace antf
