#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "antf/assprimes.hpp"
#include "antf/ideal.hpp"

namespace antf {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple graph on the vertices 1..n. Edges are stored as (i, j) with i < j,
/// sorted. Loops, repeated edges and out-of-range endpoints are rejected.
class Graph {
public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i - 1][j - 1]; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return nbrs_[v - 1]; }

  std::vector<std::size_t> isolated_vertices() const;
  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const { return components().size() <= 1; }
  bool is_bipartite() const;
  /// Subgraph induced on `vertices`, relabeled 1..k in increasing order.
  Graph induced(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

/// Elementary cycle in canonical form: the smallest vertex first, then the
/// direction whose second vertex is smaller.
struct Cycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  bool is_odd() const { return vertices.size() % 2 == 1; }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

Cycle canonical_cycle(std::vector<std::size_t> vertices);
bool is_cycle_of(const Graph& G, const Cycle& C);

struct GraphVerdict {
  bool connected = false;
  bool bipartite = false;
  Classification classification = Classification::ORACLE_ONLY;
  /// ANTF: (shortest odd cycle length - 1) / 2.
  std::optional<int> k_index;
  /// NOT_ANTF: the odd cycle with the smallest closure V(C) ∪ N(C).
  std::optional<Cycle> failing_cycle;
  std::vector<Cycle> failing_cycles;
};

/// I(G); throws InvalidArgument for a graph without edges.
MonomialIdeal edge_ideal(const Graph& G);

std::vector<Cycle> enumerate_cycles(const Graph& G);
std::vector<Cycle> enumerate_odd_cycles(const Graph& G);

/// V(C) ∪ N(V(C)), sorted.
std::vector<std::size_t> neighborhood_closure(const Graph& G, const Cycle& C);

/// Connected graphs only; throws HypothesisViolation otherwise.
GraphVerdict classify_edge_ideal(const Graph& G);

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Graph& G);

/// Indecomposable vertex covers of order b, as exponent vectors a with
/// a_i + a_j >= b on every edge.
std::vector<std::vector<int>> indecomposable_covers(const Graph& G, int b);

/// For every odd cycle C and every vertex i some j in C is adjacent to i.
bool rees_generation_check(const Graph& G);

/// Primes (V(C) ∪ N(C) ∪ W) for W a minimal vertex cover of the graph left
/// after deleting V(C) ∪ N(C). For a failing cycle of length 2j+1 these
/// belong to Ass(I(G)^m) for m >= j+1.
PrimeSet cycle_obstruction_primes(const Graph& G, const Cycle& C);

}  // namespace antf
