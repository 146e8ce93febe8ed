#include "antf/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "antf/error.hpp"

namespace antf {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adj_(n, std::vector<bool>(n, false)), nbrs_(n) {
  for (auto& [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw InvalidArgument("edge {" + std::to_string(i) + "," + std::to_string(j) +
                            "} outside vertex range 1.." + std::to_string(n));
    if (i == j) throw InvalidArgument("loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (adj_[i - 1][j - 1])
      throw InvalidArgument("repeated edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    adj_[i - 1][j - 1] = adj_[j - 1][i - 1] = true;
    nbrs_[i - 1].push_back(j);
    nbrs_[j - 1].push_back(i);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

std::vector<std::size_t> Graph::isolated_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= n_; ++v)
    if (nbrs_[v - 1].empty()) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 1; s <= n_; ++s) {
    if (comp[s - 1] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s - 1] = id;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t w : nbrs_[v - 1])
        if (comp[w - 1] < 0) {
          comp[w - 1] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (std::size_t s = 1; s <= n_; ++s) {
    if (side[s - 1] >= 0) continue;
    side[s - 1] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : nbrs_[v - 1]) {
        if (side[w - 1] < 0) {
          side[w - 1] = 1 - side[v - 1];
          stack.push_back(w);
        } else if (side[w - 1] == side[v - 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::size_t> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> label(n_ + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) label[sorted[i]] = i + 1;
  std::vector<Edge> edges;
  for (auto [i, j] : edges_)
    if (label[i] && label[j]) edges.emplace_back(label[i], label[j]);
  return Graph(sorted.size(), std::move(edges));
}

Cycle canonical_cycle(std::vector<std::size_t> vertices) {
  if (vertices.size() < 3) throw InvalidArgument("a cycle needs at least three vertices");
  auto smallest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), smallest, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());
  return Cycle{std::move(vertices)};
}

bool is_cycle_of(const Graph& G, const Cycle& C) {
  const auto& v = C.vertices;
  if (v.size() < 3) return false;
  std::vector<std::size_t> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 1 || sorted.back() > G.order()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!G.adjacent(v[i], v[(i + 1) % v.size()])) return false;
  return true;
}

MonomialIdeal edge_ideal(const Graph& G) {
  if (G.edges().empty()) throw InvalidArgument("edge ideal of a graph without edges");
  std::vector<Monomial> gens;
  for (auto [i, j] : G.edges()) gens.push_back(Monomial::from_variables(G.order(), {i, j}));
  return MonomialIdeal(G.order(), std::move(gens));
}

std::vector<Cycle> enumerate_cycles(const Graph& G) {
  // Each cycle is rooted at its smallest vertex; the two traversal
  // directions are told apart by comparing the second and last vertex.
  std::vector<Cycle> out;
  const std::size_t n = G.order();
  std::vector<bool> on_path(n + 1, false);
  std::vector<std::size_t> path;

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t root, std::size_t v) {
    for (std::size_t w : G.neighbors(v)) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) out.push_back(Cycle{path});
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(root, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t root = 1; root <= n; ++root) {
    path = {root};
    on_path[root] = true;
    extend(root, root);
    on_path[root] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.vertices < b.vertices;
  });
  return out;
}

std::vector<Cycle> enumerate_odd_cycles(const Graph& G) {
  auto all = enumerate_cycles(G);
  std::vector<Cycle> out;
  for (auto& c : all)
    if (c.is_odd()) out.push_back(std::move(c));
  return out;
}

std::vector<std::size_t> neighborhood_closure(const Graph& G, const Cycle& C) {
  if (!is_cycle_of(G, C)) throw InvalidArgument("not a cycle of the graph");
  std::vector<bool> in(G.order() + 1, false);
  for (std::size_t v : C.vertices) {
    in[v] = true;
    for (std::size_t w : G.neighbors(v)) in[w] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= G.order(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

GraphVerdict classify_edge_ideal(const Graph& G) {
  if (G.edges().empty())
    throw HypothesisViolation("graph has no edges", "the edge ideal is zero; add at least one edge");
  if (!G.isolated_vertices().empty())
    throw HypothesisViolation("graph has isolated vertices",
                              "isolated vertices do not occur in I(G); drop them and renumber");
  GraphVerdict v;
  v.connected = G.is_connected();
  if (!v.connected)
    throw HypothesisViolation("graph is disconnected",
                              "classify components separately and combine Ass of powers with "
                              "split_ass (cli: --composite)");
  v.bipartite = G.is_bipartite();
  if (v.bipartite) {
    v.classification = Classification::NTF;
    return v;
  }

  const auto odd = enumerate_odd_cycles(G);
  std::size_t shortest = odd.front().length();
  std::size_t best_closure = G.order() + 1;
  for (const auto& c : odd) {
    shortest = std::min(shortest, c.length());
    const auto closure = neighborhood_closure(G, c);
    if (closure.size() == G.order()) continue;
    v.failing_cycles.push_back(c);
    // Ties keep the first in (length, lexicographic) order.
    if (closure.size() < best_closure) {
      best_closure = closure.size();
      v.failing_cycle = c;
    }
  }
  if (v.failing_cycles.empty()) {
    v.classification = Classification::ANTF;
    v.k_index = static_cast<int>((shortest - 1) / 2);
  } else {
    v.classification = Classification::NOT_ANTF;
  }
  return v;
}

namespace {

std::vector<std::vector<std::size_t>> minimal_covers_of(const Graph& G) {
  const std::size_t n = G.order();
  if (n > 30) throw InvalidArgument("vertex cover enumeration supports at most 30 vertices");
  auto covers = [&](std::uint64_t s) {
    return std::all_of(G.edges().begin(), G.edges().end(),
                       [&](const Edge& e) { return (s >> (e.first - 1) & 1) || (s >> (e.second - 1) & 1); });
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if (s >> v & 1) minimal = !covers(s & ~(std::uint64_t{1} << v));
    if (!minimal) continue;
    std::vector<std::size_t> c;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(v + 1);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cover(const Graph& G, const std::vector<int>& a, int order) {
  return std::all_of(G.edges().begin(), G.edges().end(),
                     [&](const Edge& e) { return a[e.first - 1] + a[e.second - 1] >= order; });
}

/// Calls fn on every vector componentwise between 0 and `bound`.
template <class Fn>
bool for_each_below(const std::vector<int>& bound, Fn&& fn) {
  std::vector<int> a(bound.size(), 0);
  for (;;) {
    if (fn(a)) return true;
    std::size_t i = 0;
    while (i < a.size() && a[i] == bound[i]) a[i++] = 0;
    if (i == a.size()) return false;
    ++a[i];
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Graph& G) { return minimal_covers_of(G); }

std::vector<std::vector<int>> indecomposable_covers(const Graph& G, int b) {
  if (b < 1) throw InvalidArgument("cover order must be >= 1");
  const std::size_t n = G.order();
  std::vector<std::vector<int>> out;
  // An entry above b leaves a nonzero order-0 summand, so entries stay <= b.
  for_each_below(std::vector<int>(n, b), [&](const std::vector<int>& a) {
    if (!is_cover(G, a, b)) return false;
    const bool decomposable = for_each_below(a, [&](const std::vector<int>& a1) {
      std::vector<int> a2(n);
      for (std::size_t i = 0; i < n; ++i) a2[i] = a[i] - a1[i];
      const bool a1_zero = std::all_of(a1.begin(), a1.end(), [](int x) { return x == 0; });
      const bool a2_zero = std::all_of(a2.begin(), a2.end(), [](int x) { return x == 0; });
      for (int b1 = 0; b1 <= b; ++b1) {
        const int b2 = b - b1;
        if ((a1_zero && b1 == 0) || (a2_zero && b2 == 0)) continue;
        if (is_cover(G, a1, b1) && is_cover(G, a2, b2)) return true;
      }
      return false;
    });
    if (!decomposable) out.push_back(a);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool rees_generation_check(const Graph& G) {
  if (!G.is_connected())
    throw HypothesisViolation("graph is disconnected", "check each connected component separately");
  for (const auto& C : enumerate_odd_cycles(G))
    for (std::size_t i = 1; i <= G.order(); ++i) {
      const bool touches = std::any_of(C.vertices.begin(), C.vertices.end(),
                                       [&](std::size_t j) { return G.adjacent(i, j); });
      if (!touches) return false;
    }
  return true;
}

PrimeSet cycle_obstruction_primes(const Graph& G, const Cycle& C) {
  const auto closure = neighborhood_closure(G, C);
  std::vector<std::size_t> rest;
  for (std::size_t v = 1; v <= G.order(); ++v)
    if (!std::binary_search(closure.begin(), closure.end(), v)) rest.push_back(v);

  PrimeSet out;
  const Graph H = G.induced(rest);
  if (H.edges().empty()) {
    out.emplace_back(G.order(), closure);
    return out;
  }
  for (const auto& w : minimal_covers_of(H)) {
    std::vector<std::size_t> vars = closure;
    for (std::size_t local : w) vars.push_back(rest[local - 1]);
    out.emplace_back(G.order(), std::move(vars));
  }
  canonicalize(out);
  return out;
}

}  // namespace antf
