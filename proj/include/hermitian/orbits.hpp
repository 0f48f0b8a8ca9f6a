#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermitian/padic.hpp"

namespace hermitian {

/// A cycle of t -> 2t on Z/(2^n+1) - {0}, rotated to start at its
/// smallest element.
struct Orbit {
  unsigned n = 0;
  std::uint32_t modulus = 0;  // 2^n + 1
  std::vector<std::uint32_t> elements;

  std::size_t length() const noexcept { return elements.size(); }
  std::uint32_t at(std::ptrdiff_t index) const;  // cyclic indexing

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// All orbits, ordered by smallest element. Requires 1 <= n <= 30.
std::vector<Orbit> enumerate_orbits(unsigned n);

/// The orbit through `start`, in canonical rotation.
Orbit orbit_of(std::uint32_t start, unsigned n);

struct MinimumData {
  std::size_t position = 0;       // index of the local minimum in the cycle
  std::uint32_t value = 0;
  unsigned left_distance = 0;     // steps back to the previous local maximum
  unsigned right_distance = 0;    // steps forward to the next local maximum
  std::uint32_t left_parent = 0;
  std::uint32_t right_parent = 0;
};

struct OrbitStats {
  std::size_t length = 0;
  std::vector<std::size_t> local_maxima;  // positions
  std::vector<std::size_t> local_minima;
  std::size_t a_number = 0;
  std::vector<MinimumData> minima;
};

OrbitStats orbit_stats(const Orbit& orbit);

/// V^{left_distance} B_{left_parent} + F^{right_distance} B_{right_parent} = 0.
struct Relation {
  std::uint32_t left_parent = 0;
  unsigned left_distance = 0;
  std::uint32_t right_parent = 0;
  unsigned right_distance = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// Generators-and-relations description of the Dieudonne module of an
/// orbit: one generator block per local maximum, one relation per local
/// minimum.
struct FactorPresentation {
  std::vector<std::uint32_t> generators;
  std::vector<Relation> relations;
  std::size_t dimension = 0;
  std::size_t a_number = 0;

  /// "F^c+V^c" for the a-number one modules, otherwise the relation list
  /// such as "F^2 B12 + V B10, F B14 + V B12, F B10 + V^2 B14",
  /// one per local minimum in cycle order.
  std::string relation_word() const;
};

FactorPresentation factor_presentation(const Orbit& orbit);

/// Common dimension of the blocks of the orbit at (p, n).
u64 multiplicity(const Orbit& orbit, u64 p);

/// Image of an orbit of Z/(2^c+1) under multiplication by
/// L = (2^{ck}+1)/(2^c+1). Requires k odd.
Orbit embed_short_orbit(const Orbit& orbit, unsigned k);

/// '1' at each position whose element exceeds 2^{n-1}, read from the
/// canonical start.
std::string orbit_signature(const Orbit& orbit);

/// (1/2n) sum over odd d | n of phi(d) 2^{n/d}: the number of orbits.
u64 orbit_count_formula(unsigned n);

}  // namespace hermitian
