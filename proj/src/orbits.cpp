#include "hermitian/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "hermitian/blocks.hpp"
#include "hermitian/error.hpp"

namespace hermitian {

namespace {

void check_n(unsigned n) {
  if (n < 1 || n > 30) fail(ErrorCode::size_guard, "orbit enumeration requires 1 <= n <= 30");
}

std::string power_of(const char* op, unsigned e) {
  return e == 1 ? std::string(op) : std::string(op) + "^" + std::to_string(e);
}

}  // namespace

std::uint32_t Orbit::at(std::ptrdiff_t index) const {
  const auto r = static_cast<std::ptrdiff_t>(elements.size());
  return elements[static_cast<std::size_t>(((index % r) + r) % r)];
}

Orbit orbit_of(std::uint32_t start, unsigned n) {
  check_n(n);
  const std::uint32_t modulus = (std::uint32_t{1} << n) + 1;
  if (start == 0 || start >= modulus) fail(ErrorCode::invalid_argument, "orbit start out of range");
  Orbit orbit{n, modulus, {}};
  std::uint32_t t = start;
  do {
    orbit.elements.push_back(t);
    t = static_cast<std::uint32_t>((u64{t} * 2) % modulus);
  } while (t != start);
  std::rotate(orbit.elements.begin(),
              std::min_element(orbit.elements.begin(), orbit.elements.end()),
              orbit.elements.end());
  return orbit;
}

std::vector<Orbit> enumerate_orbits(unsigned n) {
  check_n(n);
  const std::uint32_t modulus = (std::uint32_t{1} << n) + 1;
  std::vector<bool> seen(modulus, false);
  std::vector<Orbit> orbits;
  for (std::uint32_t t = 1; t < modulus; ++t) {
    if (seen[t]) continue;
    Orbit orbit = orbit_of(t, n);
    for (std::uint32_t s : orbit.elements) seen[s] = true;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OrbitStats orbit_stats(const Orbit& orbit) {
  OrbitStats stats;
  const auto r = static_cast<std::ptrdiff_t>(orbit.length());
  stats.length = orbit.length();
  for (std::ptrdiff_t i = 0; i < r; ++i) {
    const std::uint32_t prev = orbit.at(i - 1);
    const std::uint32_t cur = orbit.at(i);
    const std::uint32_t next = orbit.at(i + 1);
    if (prev < cur && cur > next) stats.local_maxima.push_back(static_cast<std::size_t>(i));
    if (prev > cur && cur < next) stats.local_minima.push_back(static_cast<std::size_t>(i));
  }
  stats.a_number = stats.local_maxima.size();

  std::vector<bool> is_max(orbit.length(), false);
  for (std::size_t pos : stats.local_maxima) is_max[pos] = true;
  auto max_at = [&](std::ptrdiff_t i) { return is_max[static_cast<std::size_t>(((i % r) + r) % r)]; };

  for (std::size_t pos : stats.local_minima) {
    MinimumData m;
    m.position = pos;
    m.value = orbit.elements[pos];
    const auto i = static_cast<std::ptrdiff_t>(pos);
    std::ptrdiff_t d = 1;
    while (!max_at(i - d)) ++d;
    m.left_distance = static_cast<unsigned>(d);
    m.left_parent = orbit.at(i - d);
    d = 1;
    while (!max_at(i + d)) ++d;
    m.right_distance = static_cast<unsigned>(d);
    m.right_parent = orbit.at(i + d);
    stats.minima.push_back(m);
  }
  return stats;
}

FactorPresentation factor_presentation(const Orbit& orbit) {
  const OrbitStats stats = orbit_stats(orbit);
  FactorPresentation pres;
  for (std::size_t pos : stats.local_maxima) pres.generators.push_back(orbit.elements[pos]);
  for (const MinimumData& m : stats.minima) {
    pres.relations.push_back({m.left_parent, m.left_distance, m.right_parent, m.right_distance});
  }
  pres.dimension = stats.length;
  pres.a_number = stats.a_number;
  return pres;
}

std::string FactorPresentation::relation_word() const {
  if (relations.size() == 1 && relations[0].left_parent == relations[0].right_parent &&
      relations[0].left_distance == relations[0].right_distance) {
    const unsigned c = relations[0].left_distance;
    return power_of("F", c) + "+" + power_of("V", c);
  }
  std::string word;
  for (const Relation& rel : relations) {
    if (!word.empty()) word += ", ";
    word += power_of("F", rel.right_distance) + " B" + std::to_string(rel.right_parent) + " + " +
            power_of("V", rel.left_distance) + " B" + std::to_string(rel.left_parent);
  }
  return word;
}

u64 multiplicity(const Orbit& orbit, u64 p) {
  const u64 m = block_dim(BlockId{orbit.elements.front()}, p, orbit.n);
  for (std::uint32_t t : orbit.elements) {
    if (block_dim(BlockId{t}, p, orbit.n) != m) {
      fail(ErrorCode::internal_inconsistency,
           "block dimensions differ along the orbit of " + std::to_string(orbit.elements.front()));
    }
  }
  return m;
}

Orbit embed_short_orbit(const Orbit& orbit, unsigned k) {
  if (k % 2 == 0) fail(ErrorCode::invalid_argument, "embedding factor k must be odd");
  const unsigned n = orbit.n * k;
  check_n(n);
  const std::uint32_t modulus = (std::uint32_t{1} << n) + 1;
  const std::uint32_t scale = modulus / orbit.modulus;
  Orbit out{n, modulus, {}};
  for (std::uint32_t s : orbit.elements) out.elements.push_back(s * scale);
  std::rotate(out.elements.begin(), std::min_element(out.elements.begin(), out.elements.end()),
              out.elements.end());
  return out;
}

std::string orbit_signature(const Orbit& orbit) {
  const std::uint32_t half = std::uint32_t{1} << (orbit.n - 1);
  std::string sig;
  for (std::uint32_t s : orbit.elements) sig += s > half ? '1' : '0';
  return sig;
}

u64 orbit_count_formula(unsigned n) {
  check_n(n);
  u64 total = 0;
  for (unsigned d = 1; d <= n; d += 2) {
    if (n % d != 0) continue;
    unsigned phi = 0;
    for (unsigned k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1 ? 1 : 0;
    total += u64{phi} << (n / d);
  }
  return total / (2 * n);
}

}  // namespace hermitian
