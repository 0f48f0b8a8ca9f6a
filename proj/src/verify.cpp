#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "hermitian/eo.hpp"
#include "hermitian/error.hpp"

namespace hermitian {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(const EOType& type) {
  std::string out = "a=" + std::to_string(type.a_number) + " p-rank=" +
                    std::to_string(type.p_rank) + " keys=[";
  for (std::size_t k = 0; k < type.key_values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(type.key_values[k]);
  }
  return out + "]";
}

}  // namespace

std::vector<Factor> orbit_decomposition(u64 p, unsigned n) {
  std::vector<Factor> factors;
  for (Orbit& orbit : enumerate_orbits(n)) {
    Factor factor;
    factor.presentation = factor_presentation(orbit);
    factor.multiplicity = multiplicity(orbit, p);
    factor.orbit = std::move(orbit);
    factors.push_back(std::move(factor));
  }
  return factors;
}

ComponentCensus derham_components(const DeRhamOperators& ops, const std::vector<Orbit>& orbits) {
  const std::size_t size = ops.basis.size();
  const std::vector<BlockId> blocks = assign_blocks(ops.basis);
  const std::uint32_t modulus = (std::uint32_t{1} << ops.basis.params().n) + 1;

  std::vector<std::size_t> orbit_index(modulus, orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (std::uint32_t t : orbits[k].elements) orbit_index[t] = k;
  }

  DisjointSets sets(size);
  for (std::size_t index = 0; index < size; ++index) {
    if (ops.frobenius[index]) sets.unite(index, ops.frobenius[index]->target);
    if (ops.verschiebung[index]) sets.unite(index, ops.verschiebung[index]->target);
  }

  // (component root, block label) for every node, grouped by root.
  std::vector<std::pair<std::size_t, std::uint32_t>> keyed(size);
  for (std::size_t index = 0; index < size; ++index) keyed[index] = {sets.find(index), blocks[index].t};
  std::sort(keyed.begin(), keyed.end());

  ComponentCensus census;
  census.copies_per_orbit.assign(orbits.size(), 0);
  for (std::size_t begin = 0; begin < size;) {
    std::size_t end = begin;
    while (end < size && keyed[end].first == keyed[begin].first) ++end;

    const std::size_t which = orbit_index[keyed[begin].second];
    if (which == orbits.size()) {
      census.ok = false;
      census.violation = "block outside every orbit";
      return census;
    }
    const Orbit& orbit = orbits[which];
    const std::size_t nodes = end - begin;
    if (nodes % orbit.length() != 0) {
      census.ok = false;
      census.violation = "component of size " + std::to_string(nodes) +
                         " is not a whole number of copies of orbit " +
                         std::to_string(orbit.elements.front());
      return census;
    }
    const std::size_t copies = nodes / orbit.length();
    std::vector<std::size_t> per_block(modulus, 0);
    for (std::size_t k = begin; k < end; ++k) ++per_block[keyed[k].second];
    for (std::uint32_t t = 1; t < modulus; ++t) {
      const bool member = orbit_index[t] == which;
      if (per_block[t] != (member ? copies : 0)) {
        census.ok = false;
        census.violation = "component through B_" + std::to_string(keyed[begin].second) +
                           " meets B_" + std::to_string(t) + " unevenly";
        return census;
      }
    }
    census.copies_per_orbit[which] += copies;
    begin = end;
  }
  return census;
}

Verdict verify_main_theorem(u64 p, unsigned n) {
  Verdict verdict;
  verdict.params = CurveParams::make(p, n);

  const DeRhamOperators ops = build_operators(p, n);
  verdict.brute = eo_type(from_derham(ops));

  const std::vector<Orbit> orbits = enumerate_orbits(n);
  verdict.orbit = eo_type(from_orbits(orbits, p, n));
  verdict.factors = orbit_decomposition(p, n);

  verdict.eo_match = verdict.brute == verdict.orbit;
  if (!verdict.eo_match) {
    verdict.diffs.push_back("EO types differ: de Rham " + describe(verdict.brute) +
                            " vs orbits " + describe(verdict.orbit));
  }

  const BlockActionReport action = verify_block_action(ops);
  verdict.block_action_ok = action.ok;
  if (!action.ok) verdict.diffs.push_back("block action: " + action.violation);

  const ComponentCensus census = derham_components(ops, orbits);
  verdict.components_ok = census.ok;
  if (!census.ok) {
    verdict.diffs.push_back("components: " + census.violation);
  } else {
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (census.copies_per_orbit[k] != verdict.factors[k].multiplicity) {
        verdict.components_ok = false;
        verdict.diffs.push_back("orbit " + std::to_string(orbits[k].elements.front()) + ": " +
                                std::to_string(census.copies_per_orbit[k]) +
                                " copies in de Rham, multiplicity " +
                                std::to_string(verdict.factors[k].multiplicity));
      }
    }
  }
  return verdict;
}

}  // namespace hermitian
