#include "antf/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "antf/error.hpp"

namespace antf {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
}

}  // namespace

Monomial Monomial::from_variables(std::size_t n, std::span<const std::size_t> vars) {
  Monomial m(n);
  for (std::size_t v : vars) {
    if (v < 1 || v > n)
      throw InvalidArgument("variable x" + std::to_string(v) + " outside 1.." + std::to_string(n));
    ++m.exps_[v - 1];
  }
  return m;
}

Exponent Monomial::exponent_of(std::size_t var) const {
  if (var < 1 || var > exps_.size()) throw InvalidArgument("variable index out of range");
  return exps_[var - 1];
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i + 1);
  return s;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.ambient(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) throw Error("exponent overflow");
    e[i] = a[i] + b[i];
  }
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial strip(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

MonomialPrime::MonomialPrime(std::size_t n, std::vector<std::size_t> vars)
    : n_(n), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty() && (vars_.front() < 1 || vars_.back() > n_))
    throw InvalidArgument("prime variable outside 1.." + std::to_string(n_));
}

MonomialPrime MonomialPrime::maximal(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
  return MonomialPrime(n, std::move(all));
}

bool MonomialPrime::contains(std::size_t var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

std::string to_string(const MonomialPrime& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << 'x' << p.variables()[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialPrime& p) { return os << to_string(p); }

void canonicalize(PrimeSet& primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

bool is_subset(const PrimeSet& a, const PrimeSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const MonomialPrime& p) {
    return std::find(b.begin(), b.end(), p) != b.end();
  });
}

}  // namespace antf
