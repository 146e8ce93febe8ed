#include "antf/simplicial.hpp"

#include <algorithm>
#include <functional>

#include "antf/error.hpp"

namespace antf {

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Facet> facets) : n_(n) {
  for (auto& f : facets) {
    if (f.empty()) throw InvalidArgument("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidArgument("facet repeats a vertex");
    if (f.front() < 1 || f.back() > n)
      throw InvalidArgument("facet vertex outside 1.." + std::to_string(n));
  }
  std::sort(facets.begin(), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
        throw InvalidArgument(facets[i] == facets[j] ? "repeated facet" : "facet contained in another facet");
    }
  facets_ = std::move(facets);
}

MonomialIdeal facet_ideal(const SimplicialComplex& D) {
  std::vector<Monomial> gens;
  for (const auto& f : D.facets()) gens.push_back(Monomial::from_variables(D.order(), f));
  return MonomialIdeal(D.order(), std::move(gens));
}

namespace {

bool in_facet(const Facet& f, std::size_t v) { return std::binary_search(f.begin(), f.end(), v); }

/// Depth-first search for special cycles of exactly `length` facets, rooted
/// at their smallest vertex. Facets and vertices are tried in increasing
/// order, so the first hit is deterministic.
std::optional<SpecialCycle> search(const SimplicialComplex& D, std::size_t length) {
  const auto& facets = D.facets();
  std::vector<std::size_t> verts;
  std::vector<std::size_t> used_facets;
  std::vector<bool> facet_used(facets.size(), false);

  // A new facet may contain the current vertex and, when closing, v_1; no
  // other cycle vertex.
  auto facet_ok = [&](std::size_t fi, std::size_t current, std::size_t allowed) {
    for (std::size_t v : verts)
      if (v != current && v != allowed && in_facet(facets[fi], v)) return false;
    return true;
  };
  // A new vertex may only lie in the facet that reaches it.
  auto vertex_ok = [&](std::size_t w) {
    for (std::size_t k = 0; k + 1 < used_facets.size(); ++k)
      if (in_facet(facets[used_facets[k]], w)) return false;
    return true;
  };

  std::function<bool()> extend = [&]() -> bool {
    const std::size_t root = verts.front();
    const std::size_t current = verts.back();
    const bool closing = verts.size() == length;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      if (facet_used[fi] || !in_facet(facets[fi], current)) continue;
      if (closing) {
        if (in_facet(facets[fi], root) && facet_ok(fi, current, root)) {
          used_facets.push_back(fi);
          return true;
        }
        continue;
      }
      if (!facet_ok(fi, current, current)) continue;
      facet_used[fi] = true;
      used_facets.push_back(fi);
      for (std::size_t w : facets[fi]) {
        if (w <= root || w == current) continue;
        if (!vertex_ok(w)) continue;
        verts.push_back(w);
        if (extend()) return true;
        verts.pop_back();
      }
      used_facets.pop_back();
      facet_used[fi] = false;
    }
    return false;
  };

  for (std::size_t root = 1; root <= D.order(); ++root) {
    verts = {root};
    if (extend()) {
      SpecialCycle c;
      c.s = static_cast<int>((length - 1) / 2);
      c.vertices = verts;
      c.facet_index = used_facets;
      // Orientation with the smaller second vertex.
      if (c.vertices[1] > c.vertices.back()) {
        std::reverse(c.vertices.begin() + 1, c.vertices.end());
        std::reverse(c.facet_index.begin(), c.facet_index.end());
      }
      std::vector<bool> on_cycle(D.order() + 1, false);
      c.relabel.assign(D.order(), 0);
      std::size_t label = 0;
      for (std::size_t v : c.vertices) {
        on_cycle[v] = true;
        c.relabel[v - 1] = ++label;
      }
      for (std::size_t v = 1; v <= D.order(); ++v)
        if (!on_cycle[v]) c.relabel[v - 1] = ++label;
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SpecialCycle> find_special_odd_cycle(const SimplicialComplex& D) {
  const std::size_t limit = std::min(D.facets().size(), D.order());
  for (std::size_t r = 3; r <= limit; r += 2)
    if (auto c = search(D, r)) return c;
  return std::nullopt;
}

std::optional<SpecialCycle> verify_special_cycle_complex(const SimplicialComplex& D) {
  const std::size_t r = D.facets().size();
  if (r < 3 || r % 2 == 0 || r > D.order()) return std::nullopt;
  return search(D, r);
}

MonomialPrime cycle_prime(const SimplicialComplex& D, const SpecialCycle& C) {
  return MonomialPrime(D.order(), C.vertices);
}

PrimeSet predicted_ass(const SimplicialComplex& D, int m) {
  if (m < 1) throw InvalidArgument("power must be >= 1");
  const auto cycle = verify_special_cycle_complex(D);
  if (!cycle)
    throw HypothesisViolation("complex is not a special odd cycle",
                              "the facets must form one special odd cycle using every facet");
  PrimeSet out = minimal_primes(facet_ideal(D));
  if (m >= cycle->s + 1) out.push_back(cycle_prime(D, *cycle));
  canonicalize(out);
  return out;
}

Monomial step1_witness(const SimplicialComplex& D) {
  const auto cycle = verify_special_cycle_complex(D);
  if (!cycle)
    throw HypothesisViolation("complex is not a special odd cycle",
                              "the facets must form one special odd cycle using every facet");
  const std::size_t r = cycle->length();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t v = cycle->vertices[i];
    const std::size_t next = cycle->vertices[(i + 1) % r];
    vars.push_back(v);
    for (std::size_t w : D.facets()[cycle->facet_index[i]])
      if (w != v && w != next) vars.push_back(w);
  }
  return Monomial::from_variables(D.order(), vars);
}

SimplicialComplex relabeled(const SimplicialComplex& D, const std::vector<std::size_t>& relabel) {
  if (relabel.size() != D.order()) throw InvalidArgument("relabeling has the wrong size");
  std::vector<Facet> facets;
  for (const auto& f : D.facets()) {
    Facet g;
    for (std::size_t v : f) g.push_back(relabel[v - 1]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(D.order(), std::move(facets));
}

}  // namespace antf
