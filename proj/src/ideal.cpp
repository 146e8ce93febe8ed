#include "antf/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "antf/error.hpp"

namespace antf {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
  for (const auto& g : gens)
    if (g.ambient() != n) throw AmbientMismatch(n, g.ambient());
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Degree-ascending order means a divisor of g is always already kept.
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

Monomial MonomialIdeal::lcm() const {
  Monomial l(n_);
  for (const auto& g : gens_) l = antf::lcm(l, g);
  return l;
}

std::vector<std::size_t> MonomialIdeal::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i)
    for (const auto& g : gens_)
      if (g[i] > 0) {
        s.push_back(i + 1);
        break;
      }
  return s;
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

bool member(const Monomial& u, const MonomialIdeal& I) {
  if (u.ambient() != I.ambient()) throw AmbientMismatch(u.ambient(), I.ambient());
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Monomial& g) { return member(g, I); });
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient()) throw AmbientMismatch(I.ambient(), J.ambient());
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw InvalidArgument("power exponent must be >= 1");
  MonomialIdeal acc = I;
  for (int i = 1; i < k; ++i) acc = product(acc, I);
  return acc;
}

std::vector<MonomialIdeal> powers(const MonomialIdeal& I, int kmax) {
  if (kmax < 1) throw InvalidArgument("kmax must be >= 1");
  std::vector<MonomialIdeal> out{I};
  for (int k = 2; k <= kmax; ++k) out.push_back(product(out.back(), I));
  return out;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  if (u.ambient() != I.ambient()) throw AmbientMismatch(u.ambient(), I.ambient());
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(strip(g, u));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& P) {
  if (P.ambient() != I.ambient()) throw AmbientMismatch(P.ambient(), I.ambient());
  std::vector<bool> keep(I.ambient(), false);
  for (std::size_t v : P.variables()) keep[v - 1] = true;
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!keep[i]) e[i] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient()) throw AmbientMismatch(I.ambient(), J.ambient());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.ambient(), std::move(gens));
}

bool ideal_equal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient()) throw AmbientMismatch(I.ambient(), J.ambient());
  return I == J;
}

MonomialIdeal prime_ideal(const MonomialPrime& P) {
  std::vector<Monomial> gens;
  for (std::size_t v : P.variables()) gens.push_back(Monomial::from_variables(P.ambient(), {v}));
  return MonomialIdeal(P.ambient(), std::move(gens));
}

MonomialPrime radical_prime(const MonomialIdeal& I) { return MonomialPrime(I.ambient(), I.support()); }

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < I.size(); ++i) os << (i ? ", " : "") << to_string(I.generators()[i]);
  os << ')';
  return os.str();
}

}  // namespace antf
