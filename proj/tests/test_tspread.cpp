#include <doctest.h>

#include <random>

#include "antf/assprimes.hpp"
#include "antf/error.hpp"
#include "antf/tspread.hpp"
#include "support.hpp"

using namespace antf;
namespace at = antf::testing;

namespace {
BorelSpec spec(std::size_t t, std::size_t n, std::vector<std::size_t> u) { return BorelSpec{t, n, std::move(u)}; }
MonomialPrime prime(std::size_t n, std::vector<std::size_t> v) { return MonomialPrime(n, std::move(v)); }
std::vector<std::size_t> range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t i = a; i <= b; ++i) out.push_back(i);
  return out;
}

/// Brute-force generators: all index-dominated t-spread tuples.
std::vector<std::vector<std::size_t>> brute_tuples(const BorelSpec& s) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t d = s.degree();
  std::vector<std::size_t> j(d, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t l) {
    if (l == d) {
      out.push_back(j);
      return;
    }
    for (std::size_t x = 1; x <= s.n; ++x) {
      j[l] = x;
      bool ok = x <= s.indices[l] && (l == 0 || x >= j[l - 1] + s.t);
      if (ok) rec(l + 1);
    }
  };
  rec(0);
  return out;
}

// Associated primes of B_3(x_3 x_7 x_10), written out by hand.
PrimeSet b3_primes() {
  PrimeSet p{prime(10, {7, 8, 9, 10}), prime(10, {4, 8, 9, 10}), prime(10, {4, 5, 9, 10}), prime(10, {4, 5, 6, 10}),
             prime(10, {1, 8, 9, 10}), prime(10, {1, 5, 9, 10}), prime(10, {1, 5, 6, 10}), prime(10, {1, 2, 9, 10}),
             prime(10, {1, 2, 6, 10}), prime(10, {1, 2, 3}),     prime(10, {4, 5, 6, 7}),  prime(10, {1, 5, 6, 7}),
             prime(10, {1, 2, 6, 7})};
  canonicalize(p);
  return p;
}
}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(spec(0, 5, {1, 5}).validate(), InvalidArgument);
  CHECK_THROWS_AS(spec(2, 5, {2, 3}).validate(), InvalidArgument);
  CHECK_THROWS_AS(spec(2, 5, {2, 6}).validate(), InvalidArgument);
  CHECK_THROWS_AS(spec(2, 5, {}).validate(), InvalidArgument);
  CHECK_NOTHROW(spec(2, 5, {1, 3}).validate());
}

TEST_CASE("generators are the index-dominated spread tuples") {
  for (const auto& s : {spec(3, 10, {3, 7, 10}), spec(2, 8, {2, 5, 8}), spec(1, 5, {2, 4}), spec(2, 9, {1, 4, 6, 9})}) {
    const auto I = generate(s);
    const auto tuples = brute_tuples(s);
    REQUIRE(I.size() == tuples.size());
    for (const auto& tup : tuples) CHECK(member(Monomial::from_variables(s.n, tup), I));
  }
  CHECK(generate(spec(1, 2, {1, 2})) == MonomialIdeal(2, {Monomial::from_variables(2, {1, 2})}));
  // j_l <= 1 + (l-1)t with gaps >= t pins every index
  CHECK(generate(spec(3, 7, {1, 4, 7})).size() == 1);
  CHECK(generate(spec(3, 9, {3, 6, 9})).size() == brute_tuples(spec(3, 9, {3, 6, 9})).size());
}

TEST_CASE("generators are closed under the spread exchange") {
  const auto s = spec(2, 9, {3, 6, 9});
  const auto I = generate(s);
  for (const auto& g : I.generators()) {
    const auto sup = g.support();
    for (std::size_t p = 0; p < sup.size(); ++p)
      for (std::size_t i = 1; i < sup[p]; ++i) {
        auto moved = sup;
        moved[p] = i;
        std::sort(moved.begin(), moved.end());
        bool spread = std::adjacent_find(moved.begin(), moved.end(),
                                         [&](std::size_t a, std::size_t b) { return b < a + s.t; }) == moved.end();
        if (spread) CHECK(member(Monomial::from_variables(s.n, moved), I));
      }
  }
}

TEST_CASE("B_3(x3 x7 x10)") {
  const auto s = spec(3, 10, {3, 7, 10});
  const auto I = generate(s);
  CHECK(associated_primes(I) == b3_primes());
  CHECK(minimal_primes(I) == b3_primes());  // squarefree
  CHECK(candidate_ass(s) == b3_primes());
  const auto cands = candidate_ass(s);
  CHECK(std::find(cands.begin(), cands.end(), prime(10, {1, 2, 3})) != cands.end());
}

TEST_CASE("candidates contain the oracle primes") {
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::size_t n = 2 * t + 1; n <= 9; ++n)
      for (std::size_t i1 = t; i1 + t <= n; ++i1) {
        const auto s2 = spec(t, n, {i1, n});
        const auto c2 = candidate_ass(s2);
        CHECK(is_subset(associated_primes(generate(s2)), c2));
        for (std::size_t i2 = i1 + t; i2 + t <= n; ++i2) {
          const auto s3 = spec(t, n, {i1, i2, n});
          CHECK(is_subset(associated_primes(generate(s3)), candidate_ass(s3)));
        }
      }
  CHECK_THROWS_AS(candidate_ass(spec(2, 8, {2, 5})), HypothesisViolation);
}

TEST_CASE("normalization") {
  auto nz = normalize(spec(3, 10, {3, 7, 10}));
  CHECK(nz.spec == spec(3, 10, {3, 7, 10}));
  CHECK(nz.exact);
  nz = normalize(spec(3, 9, {2, 6, 9}));
  CHECK(nz.spec == spec(2, 8, {2, 5, 8}));
  CHECK(nz.variable_map == std::vector<std::size_t>{1, 2, 4, 5, 6, 7, 8, 9});
  CHECK_FALSE(nz.exact);
  CHECK(normalize(spec(1, 6, {1, 3, 6})).exact);
}

TEST_CASE("normalization is exact in degree 2") {
  for (std::size_t t = 2; t <= 4; ++t)
    for (std::size_t n = t + 2; n <= 10; ++n)
      for (std::size_t i1 = 1; i1 < t && i1 + t <= n; ++i1) {
        const auto s = spec(t, n, {i1, n});
        const auto nz = normalize(s);
        REQUIRE(nz.exact);
        // same ideal once the dropped variables are ignored
        CHECK(pull_back(generate(nz.spec), nz.variable_map, n) == generate(s));
      }
}

TEST_CASE("normalization is not exact in degree 3 below t") {
  const auto s = spec(3, 7, {1, 4, 7});
  const auto nz = normalize(s);
  CHECK_FALSE(nz.exact);
  CHECK_FALSE(pull_back(generate(nz.spec), nz.variable_map, s.n) == generate(s));
}

TEST_CASE("degree two classification") {
  CHECK(classify_deg2(spec(2, 7, {2, 7})).classification == Classification::NTF);
  CHECK(classify_deg2(spec(1, 5, {1, 5})).classification == Classification::NTF);
  const auto v = classify_deg2(spec(2, 7, {3, 7}));
  CHECK(v.classification == Classification::ANTF);
  CHECK(v.extra_prime == MonomialPrime::maximal(7));
  const auto r = ass_of_powers(generate(spec(2, 7, {3, 7})), 3);
  const auto& sq = r.powers.at(2);
  CHECK(std::find(sq.begin(), sq.end(), MonomialPrime::maximal(7)) != sq.end());
  CHECK_THROWS_AS(classify_deg2(spec(2, 7, {3, 6, 7})), InvalidArgument);
  CHECK_THROWS_AS(classify_deg2(spec(2, 7, {1, 7})), HypothesisViolation);
}

TEST_CASE("degree three classification") {
  CHECK(classify_deg3(spec(2, 8, {2, 4, 8})).classification == Classification::NTF);
  CHECK(classify_deg3(spec(1, 5, {1, 2, 5})).classification == Classification::NTF);
  const auto v = classify_deg3(spec(3, 10, {3, 7, 10}));
  CHECK(v.classification == Classification::NOT_ANTF);
  CHECK(std::find(v.obstruction_primes.begin(), v.obstruction_primes.end(), prime(10, range(4, 10))) !=
        v.obstruction_primes.end());
  const auto r = ass_of_powers(generate(spec(3, 10, {3, 7, 10})), 2);
  for (const auto& p : v.obstruction_primes) {
    CHECK(std::find(r.powers.at(2).begin(), r.powers.at(2).end(), p) != r.powers.at(2).end());
    CHECK(std::find(r.powers.at(1).begin(), r.powers.at(1).end(), p) == r.powers.at(1).end());
  }
  // with t = 1 the two obstruction primes coincide
  CHECK(classify_deg3(spec(1, 5, {1, 3, 5})).obstruction_primes.size() == 1);
}

TEST_CASE("fast membership for x_t x_2t x_n") {
  const auto s = spec(2, 6, {2, 4, 6});
  const auto I = generate(s);
  for (int k = 1; k <= 2; ++k) {
    const auto Ik = power(I, k);
    at::for_each_below({2, 2, 2, 2, 2, 2}, [&](const at::Exps& e) {
      const Monomial v(e);
      CHECK(fast_membership_t2t(s, v, k) == member(v, Ik));
      if (member(v, Ik)) CHECK(window_condition_t2t(s, v, k));
    });
  }
  for (std::size_t t = 1; t <= 3; ++t) {
    const auto st = spec(t, 3 * t + 1, {t, 2 * t, 3 * t + 1});
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::size_t> vs;
      for (int c = 0; c < k; ++c) vs.insert(vs.end(), {1, t + 1, 2 * t + 1});
      CHECK(fast_membership_t2t(st, Monomial::from_variables(st.n, vs), k));
      // one variable short in [1, t]
      vs.erase(vs.begin());
      CHECK_FALSE(fast_membership_t2t(st, Monomial::from_variables(st.n, vs), k));
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<Exponent> e(0, 3);
  const auto Isq = power(I, 2);
  for (int trial = 0; trial < 300; ++trial) {
    at::Exps x(6);
    for (auto& v : x) v = e(rng);
    CHECK(fast_membership_t2t(s, Monomial(x), 2) == member(Monomial(x), Isq));
  }
  CHECK_THROWS_AS(fast_membership_t2t(spec(2, 7, {2, 5, 7}), Monomial(7), 1), InvalidArgument);
}

TEST_CASE("window counts alone do not decide membership") {
  const auto s = spec(2, 6, {2, 4, 6});
  const auto v = Monomial::from_variables(6, {2, 3, 6});
  CHECK(window_condition_t2t(s, v, 1));
  CHECK_FALSE(member(v, generate(s)));
  CHECK_FALSE(fast_membership_t2t(s, v, 1));
}

TEST_CASE("pull back") {
  const std::vector<std::size_t> map{1, 3, 4};
  CHECK(pull_back(prime(3, {2, 3}), map, 5) == prime(5, {3, 4}));
  const auto I = pull_back(MonomialIdeal(3, {Monomial::from_variables(3, {1, 2})}), map, 5);
  CHECK(I == MonomialIdeal(5, {Monomial::from_variables(5, {1, 3})}));
}
