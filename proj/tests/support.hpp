// Brute-force references shared by the unit and acceptance tests. Nothing
// here calls into the witness search or the closed-form classifiers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "antf/graph.hpp"
#include "antf/ideal.hpp"
#include "antf/monomial.hpp"

namespace antf::testing {

using Exps = std::vector<Exponent>;

inline bool divides_exps(const Exps& g, const Exps& u) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > u[i]) return false;
  return true;
}

inline std::vector<Exps> gens_of(const MonomialIdeal& I) {
  std::vector<Exps> out;
  for (const auto& g : I.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

/// Every monomial with exponents bounded by `bound`, in odometer order.
inline void for_each_below(const Exps& bound, const std::function<void(const Exps&)>& f) {
  Exps u(bound.size(), 0);
  while (true) {
    f(u);
    std::size_t i = 0;
    while (i < u.size() && u[i] == bound[i]) u[i++] = 0;
    if (i == u.size()) return;
    ++u[i];
  }
}

/// Ass by exhausting all u with u_i <= max generator exponent in x_i; a
/// prime P is associated iff some colon I:u is generated by variables.
inline PrimeSet brute_ass(const MonomialIdeal& I) {
  const std::size_t n = I.ambient();
  const auto gens = gens_of(I);
  Exps bound(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  std::set<std::vector<std::size_t>> found;
  for_each_below(bound, [&](const Exps& u) {
    std::vector<std::size_t> vars;
    for (const auto& g : gens) {
      std::size_t deg = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > u[i]) {
          deg += g[i] - u[i];
          var = i + 1;
        }
      if (deg == 0) return;  // u in I
      if (deg == 1) vars.push_back(var);
    }
    // colon is prime iff each quotient generator is divisible by a
    // variable quotient generator
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (const auto& g : gens) {
      bool hit = false;
      for (std::size_t v : vars) hit = hit || g[v - 1] > u[v - 1];
      if (!hit) return;
    }
    found.insert(vars);
  });
  PrimeSet out;
  for (const auto& v : found) out.emplace_back(n, v);
  canonicalize(out);
  return out;
}

/// Inclusion-minimal variable sets meeting the support of every generator.
inline PrimeSet brute_min_primes(const MonomialIdeal& I) {
  const std::size_t n = I.ambient();
  std::vector<std::uint32_t> masks;
  for (const auto& g : I.generators()) {
    std::uint32_t m = 0;
    for (std::size_t v : g.support()) m |= 1u << (v - 1);
    masks.push_back(m);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) != 0; }))
      covers.push_back(s);
  PrimeSet out;
  for (std::uint32_t s : covers) {
    bool minimal = true;
    for (std::uint32_t c : covers) minimal = minimal && !(c != s && (c & s) == c);
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) vars.push_back(i + 1);
    out.emplace_back(n, vars);
  }
  canonicalize(out);
  return out;
}

/// u in I^k iff some k-fold product of generators (with repetition) divides u.
inline bool brute_member_power(const MonomialIdeal& I, const Monomial& u, int k) {
  const auto gens = gens_of(I);
  const Exps target(u.exponents().begin(), u.exponents().end());
  std::function<bool(Exps, std::size_t, int)> rec = [&](Exps acc, std::size_t from, int left) {
    if (!divides_exps(acc, target)) return false;
    if (left == 0) return true;
    for (std::size_t g = from; g < gens.size(); ++g) {
      Exps next = acc;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += gens[g][i];
      if (rec(next, g, left - 1)) return true;
    }
    return false;
  };
  return rec(Exps(I.ambient(), 0), 0, k);
}

/// Cycles from vertex subsets and all cyclic orderings; canonical form
/// starts at the smallest vertex with second < last.
inline std::vector<Cycle> brute_cycles(const Graph& G) {
  const std::size_t n = G.order();
  std::vector<Cycle> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) vs.push_back(i + 1);
    if (vs.size() < 3) continue;
    std::vector<std::size_t> rest(vs.begin() + 1, vs.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<std::size_t> cyc{vs.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t i = 0; i < cyc.size(); ++i) ok = ok && G.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (ok) out.push_back(Cycle{cyc});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.vertices < b.vertices;
  });
  return out;
}

/// Graph from an edge bitmask over the pairs (i<j) in lex order.
inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// One representative per isomorphism class of connected graphs with edges on n
/// vertices; the representative has the smallest mask in its class.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // index of pair (a,b) for the permuted image
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    index[pairs[b].first][pairs[b].second] = b;
    index[pairs[b].second][pairs[b].first] = b;
  }
  std::vector<Graph> out;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool smallest = true;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1) image |= 1u << index[perm[pairs[b].first]][perm[pairs[b].second]];
      if (image < mask) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    Graph G = graph_from_mask(n, mask);
    if (!G.edges().empty() && G.is_connected()) out.push_back(G);
  }
  return out;
}

/// Random monomial ideal: up to `max_gens` generators, exponents <= max_exp,
/// never the unit ideal.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, Exponent max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<Exponent> e(0, max_exp);
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Monomial> gens;
  const std::size_t m = count(rng);
  while (gens.size() < m) {
    Exps x(n);
    for (auto& v : x) v = e(rng);
    if (std::any_of(x.begin(), x.end(), [](Exponent v) { return v > 0; })) gens.emplace_back(x);
  }
  return MonomialIdeal(n, gens);
}

}  // namespace antf::testing
