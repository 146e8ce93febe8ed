#pragma once

#include <optional>
#include <vector>

#include "antf/assprimes.hpp"
#include "antf/ideal.hpp"

namespace antf {

using Facet = std::vector<std::size_t>;

/// Simplicial complex on 1..n given by its facets. Facets are stored sorted,
/// nonempty and pairwise incomparable under inclusion.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t n, std::vector<Facet> facets);

  std::size_t order() const { return n_; }
  const std::vector<Facet>& facets() const { return facets_; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Facet> facets_;
};

/// Alternating cycle v_1, F_1, v_2, ..., v_r, F_r with v_i, v_{i+1} in F_i and
/// no F_i holding a third cycle vertex. Odd length r = 2s + 1.
struct SpecialCycle {
  int s = 0;
  std::vector<std::size_t> vertices;
  /// Indices into SimplicialComplex::facets(); facet_index[i] is F_{i+1}.
  std::vector<std::size_t> facet_index;
  /// relabel[v - 1] is the new label of vertex v: cycle vertices become
  /// 1..2s+1 in cycle order, the others follow in increasing order.
  std::vector<std::size_t> relabel;

  std::size_t length() const { return vertices.size(); }
};

MonomialIdeal facet_ideal(const SimplicialComplex& D);

/// Shortest special odd cycle, if any; with none, I(D) is normally
/// torsionfree.
std::optional<SpecialCycle> find_special_odd_cycle(const SimplicialComplex& D);

/// The cycle when the facets of D are exactly those of one special odd cycle.
std::optional<SpecialCycle> verify_special_cycle_complex(const SimplicialComplex& D);

/// Prime generated by the cycle vertices.
MonomialPrime cycle_prime(const SimplicialComplex& D, const SpecialCycle& C);

/// Min(I(D)) for m <= s, Min(I(D)) plus the cycle prime for m >= s + 1.
/// Throws HypothesisViolation unless D is a special odd cycle.
PrimeSet predicted_ass(const SimplicialComplex& D, int m);

/// u = x_{v_1} x_{F_1 \ {v_1,v_2}} x_{v_2} ... x_{v_{2s+1}} x_{F_{2s+1} \ {v_{2s+1},v_1}},
/// which satisfies I^{s+1} : u = cycle prime.
Monomial step1_witness(const SimplicialComplex& D);

/// Applies a vertex relabeling (new label of v is relabel[v - 1]).
SimplicialComplex relabeled(const SimplicialComplex& D, const std::vector<std::size_t>& relabel);

}  // namespace antf
