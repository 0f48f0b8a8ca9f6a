#include <algorithm>
#include <set>

#include "doctest.h"
#include "hermitian/error.hpp"
#include "hermitian/orbits.hpp"
#include "oracles.hpp"

using namespace hermitian;

namespace {

std::vector<std::uint32_t> elems(std::initializer_list<std::uint32_t> v) { return v; }

}  // namespace

TEST_CASE("orbit enumeration examples") {
  const auto o2 = enumerate_orbits(2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].elements == elems({1, 2, 4, 3}));

  const auto o3 = enumerate_orbits(3);
  REQUIRE(o3.size() == 2);
  CHECK(o3[0].elements == elems({1, 2, 4, 8, 7, 5}));
  CHECK(o3[1].elements == elems({3, 6}));

  const auto o4 = enumerate_orbits(4);
  REQUIRE(o4.size() == 2);
  CHECK(o4[0].elements == elems({1, 2, 4, 8, 16, 15, 13, 9}));
  CHECK(o4[1].elements == elems({3, 6, 12, 7, 14, 11, 5, 10}));

  CHECK(orbit_of(14, 4) == o4[1]);
  CHECK_THROWS_AS(enumerate_orbits(0), Error);
  CHECK_THROWS_AS(enumerate_orbits(31), Error);
  CHECK_THROWS_AS(orbit_of(17, 4), Error);
}

TEST_CASE("orbit counts") {
  for (unsigned n = 1; n <= 12; ++n) {
    const u64 count = enumerate_orbits(n).size();
    CHECK(count == oracle::kA000016[n]);
    CHECK(count == oracle::count_doubling_cycles(n));
    CHECK(orbit_count_formula(n) == count);
  }
  for (unsigned n = 13; n <= 20; ++n) CHECK(orbit_count_formula(n) == oracle::count_doubling_cycles(n));
}

TEST_CASE("orbit of one") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Orbit orbit = orbit_of(1, n);
    const OrbitStats stats = orbit_stats(orbit);
    CHECK(stats.a_number == 1);
    REQUIRE(stats.minima.size() == 1);
    CHECK(stats.minima[0].value == 1);
    CHECK(stats.minima[0].left_parent == (1u << n));
    CHECK(stats.minima[0].right_parent == (1u << n));
    CHECK(stats.minima[0].left_distance == n);
    CHECK(stats.minima[0].right_distance == n);
    const std::string expected = n == 1 ? "F+V" : "F^" + std::to_string(n) + "+V^" + std::to_string(n);
    CHECK(factor_presentation(orbit).relation_word() == expected);
    CHECK(orbit_signature(orbit) == std::string(n, '0') + std::string(n, '1'));
  }
}

TEST_CASE("the second orbit at n = 4") {
  const Orbit orbit = orbit_of(3, 4);
  const FactorPresentation pres = factor_presentation(orbit);
  CHECK(pres.a_number == 3);
  CHECK(pres.dimension == 8);
  std::vector<std::uint32_t> gens = pres.generators;
  std::sort(gens.begin(), gens.end());
  CHECK(gens == elems({10, 12, 14}));

  // (L, l, R, r) with V^l B_L + F^r B_R = 0
  std::set<Relation> relations(pres.relations.begin(), pres.relations.end());
  const std::set<Relation> expected = {{12, 1, 14, 1}, {14, 2, 10, 1}, {10, 1, 12, 2}};
  CHECK(relations == expected);
  CHECK(pres.relation_word() == "F^2 B12 + V B10, F B14 + V B12, F B10 + V^2 B14");
}

TEST_CASE("presentations of the small cases") {
  CHECK(factor_presentation(orbit_of(1, 2)).relation_word() == "F^2+V^2");
  CHECK(factor_presentation(orbit_of(3, 3)).relation_word() == "F+V");
}

TEST_CASE("orbit combinatorics up to n = 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    const u64 modulus = (u64{1} << n) + 1;
    std::vector<int> cover(modulus, 0);
    std::set<std::pair<std::size_t, std::string>> signatures;
    for (const Orbit& orbit : enumerate_orbits(n)) {
      INFO("n=" << n << " orbit of " << orbit.elements.front());
      const OrbitStats stats = orbit_stats(orbit);
      CHECK(orbit.length() % 2 == 0);
      CHECK((2 * n) % orbit.length() == 0);
      CHECK(stats.a_number % 2 == 1);
      CHECK(stats.local_maxima.size() == stats.local_minima.size());
      CHECK(orbit.elements.front() == *std::min_element(orbit.elements.begin(), orbit.elements.end()));
      for (std::size_t k = 0; k < orbit.length(); ++k) {
        CHECK(orbit.at(static_cast<std::ptrdiff_t>(k) + 1) == 2 * orbit.elements[k] % modulus);
      }
      for (const MinimumData& m : stats.minima) {
        CHECK(m.left_distance >= 1);
        CHECK(m.right_distance >= 1);
      }
      std::set<std::uint32_t> members(orbit.elements.begin(), orbit.elements.end());
      for (std::uint32_t t : orbit.elements) {
        CHECK(members.count(static_cast<std::uint32_t>(modulus - t)) == 1);
        ++cover[t];
      }
      const FactorPresentation pres = factor_presentation(orbit);
      CHECK(pres.dimension == orbit.length());
      CHECK(pres.a_number == stats.a_number);
      CHECK(pres.relations.size() == stats.a_number);
      CHECK(signatures.insert({orbit.length(), orbit_signature(orbit)}).second);
    }
    for (u64 t = 1; t < modulus; ++t) CHECK(cover[t] == 1);
  }
}

TEST_CASE("short orbits come from odd divisors") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto orbits = enumerate_orbits(n);
    std::set<std::vector<std::uint32_t>> enumerated;
    for (const Orbit& o : orbits) enumerated.insert(o.elements);

    std::set<std::vector<std::uint32_t>> embedded;
    for (unsigned k = 3; k <= n; k += 2) {
      if (n % k != 0) continue;
      for (const Orbit& small : enumerate_orbits(n / k)) {
        const Orbit big = embed_short_orbit(small, k);
        CHECK(enumerated.count(big.elements) == 1);
        const std::uint32_t scale = big.modulus / small.modulus;
        std::vector<Relation> scaled = factor_presentation(small).relations;
        for (Relation& r : scaled) {
          r.left_parent *= scale;
          r.right_parent *= scale;
        }
        CHECK(factor_presentation(big).relations == scaled);
        embedded.insert(big.elements);
      }
    }
    for (const Orbit& o : orbits) {
      const bool is_short = o.length() < 2 * n;
      CHECK(is_short == (embedded.count(o.elements) == 1));
    }
    const bool has_odd_divisor = (n >> __builtin_ctz(n)) > 1;
    const bool any_short = std::any_of(orbits.begin(), orbits.end(),
                                       [&](const Orbit& o) { return o.length() < 2 * n; });
    CHECK(any_short == has_odd_divisor);
  }
  CHECK(embed_short_orbit(orbit_of(1, 1), 3).elements == elems({3, 6}));
  CHECK_THROWS_AS(embed_short_orbit(orbit_of(1, 1), 2), Error);
}

TEST_CASE("multiplicities") {
  CHECK(multiplicity(orbit_of(3, 3), 2) == 1);
  CHECK(multiplicity(orbit_of(1, 3), 2) == 9);
  for (u64 p : {2, 3, 5}) {
    for (unsigned n = 1; n <= 4; ++n) {
      if (p == 5 && n == 4) continue;
      u64 total = 0;
      for (const Orbit& o : enumerate_orbits(n)) total += o.length() * multiplicity(o, p);
      CHECK(total == 2 * oracle::genus(p, n));
      if (n >= 2) CHECK(multiplicity(orbit_of(1, n), p) == oracle::cartier_rank(p, n, n - 1));
    }
  }
  for (u64 p : {2, 3}) {
    for (const auto& [c, k] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {1, 5}, {2, 3}}) {
      for (const Orbit& small : enumerate_orbits(c)) {
        const u64 m = multiplicity(small, p);
        CHECK(multiplicity(embed_short_orbit(small, k), p) == oracle::power(m, k));
      }
    }
    CHECK(multiplicity(orbit_of(3, 3), p) == oracle::power(p * (p - 1) / 2, 3));
  }
}
