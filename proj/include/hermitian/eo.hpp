#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/blocks.hpp"
#include "hermitian/derham.hpp"
#include "hermitian/orbits.hpp"

namespace hermitian {

using Arrow = std::optional<std::uint32_t>;

/// A Dieudonne module in which F and V send nodes to nodes (or to zero).
/// Each node stands for a coordinate subspace of dimension `weight`, and
/// the arrows act as isomorphisms between those subspaces.
class WeightedPermutationModule {
 public:
  /// Validates: injective arrows, FV = VF = 0, ker f = im v, equal weights
  /// along arrows, and ker f carrying exactly half the total weight.
  WeightedPermutationModule(std::vector<u64> weights, std::vector<Arrow> f,
                            std::vector<Arrow> v);

  std::size_t size() const noexcept { return weights_.size(); }
  u64 weight(std::size_t node) const { return weights_[node]; }
  const Arrow& f(std::size_t node) const { return f_[node]; }
  const Arrow& v(std::size_t node) const { return v_[node]; }
  u64 total_weight() const noexcept { return total_; }
  u64 genus() const noexcept { return total_ / 2; }

 private:
  std::vector<u64> weights_;
  std::vector<Arrow> f_;
  std::vector<Arrow> v_;
  u64 total_ = 0;
};

/// A coordinate subspace: a set of nodes.
struct Subobject {
  std::vector<bool> members;
  u64 dimension = 0;

  friend bool operator==(const Subobject& a, const Subobject& b) { return a.members == b.members; }
};

Subobject image_under_v(const WeightedPermutationModule& m, const Subobject& s);
Subobject preimage_under_f(const WeightedPermutationModule& m, const Subobject& s);

WeightedPermutationModule from_derham(const DeRhamOperators& ops);

/// One node per block t (node index t - 1) with weight m(orbit of t).
WeightedPermutationModule from_orbits(const std::vector<Orbit>& orbits, u64 p, unsigned n);

/// Closure of {0, M} under v and f^{-1}, sorted by dimension. Throws
/// not_a_chain if two members are incomparable.
std::vector<Subobject> canonical_filtration(const WeightedPermutationModule& m);

/// nu is constant (step 0) or rises by one per index (step 1) on
/// [first, last]; `base` is nu_{first-1}.
struct Fragment {
  u64 first = 0;
  u64 last = 0;
  unsigned step = 0;
  u64 base = 0;

  u64 value_at(u64 i) const noexcept { return base + step * (i - first + 1); }
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct EOType {
  u64 genus = 0;
  std::vector<Fragment> fragments;
  std::vector<u64> nu;  // nu_1..nu_g; left empty when g exceeds the materialisation cap
  u64 p_rank = 0;
  u64 a_number = 0;
  std::vector<u64> key_values;

  u64 nu_at(u64 i) const;  // 1-based
  void check_invariants() const;

  friend bool operator==(const EOType& a, const EOType& b) {
    return a.genus == b.genus && a.fragments == b.fragments && a.p_rank == b.p_rank &&
           a.a_number == b.a_number && a.key_values == b.key_values;
  }
};

inline constexpr u64 kMaterializeLimit = 1'000'000;

EOType eo_type(const WeightedPermutationModule& m);

/// Decomposition entry: an orbit, its Dieudonne module and how often it
/// occurs.
struct Factor {
  Orbit orbit;
  FactorPresentation presentation;
  u64 multiplicity = 0;
};

/// Orbit-path decomposition (no de Rham computation).
std::vector<Factor> orbit_decomposition(u64 p, unsigned n);

/// Copies of each orbit found among the connected components of the F/V
/// graph on the de Rham basis.
struct ComponentCensus {
  bool ok = true;
  std::string violation;
  std::vector<u64> copies_per_orbit;  // parallel to enumerate_orbits(n)
};

ComponentCensus derham_components(const DeRhamOperators& ops, const std::vector<Orbit>& orbits);

struct Verdict {
  CurveParams params;
  EOType brute;
  EOType orbit;
  std::vector<Factor> factors;
  bool eo_match = false;
  bool block_action_ok = false;
  bool components_ok = false;
  std::vector<std::string> diffs;

  bool verified() const noexcept { return eo_match && block_action_ok && components_ok; }
};

/// Runs both paths for (p, n) and compares them.
Verdict verify_main_theorem(u64 p, unsigned n);

}  // namespace hermitian
