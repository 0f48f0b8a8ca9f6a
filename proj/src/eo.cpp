#include "hermitian/eo.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "hermitian/error.hpp"

namespace hermitian {

WeightedPermutationModule::WeightedPermutationModule(std::vector<u64> weights,
                                                     std::vector<Arrow> f, std::vector<Arrow> v)
    : weights_(std::move(weights)), f_(std::move(f)), v_(std::move(v)) {
  const std::size_t size = weights_.size();
  if (f_.size() != size || v_.size() != size) {
    fail(ErrorCode::invalid_argument, "arrow tables do not match the node count");
  }
  std::vector<bool> f_hit(size, false);
  std::vector<bool> v_hit(size, false);
  u64 kernel_weight = 0;
  for (std::size_t node = 0; node < size; ++node) {
    if (weights_[node] == 0) fail(ErrorCode::invalid_argument, "node weights must be positive");
    total_ += weights_[node];
    auto record = [&](const Arrow& arrow, std::vector<bool>& hit, const char* name) {
      if (!arrow) return;
      const std::uint32_t target = *arrow;
      if (target >= size) fail(ErrorCode::internal_inconsistency, "arrow target out of range");
      if (hit[target]) {
        fail(ErrorCode::internal_inconsistency,
             std::string(name) + " arrow is not injective at node " + std::to_string(target));
      }
      hit[target] = true;
      if (weights_[target] != weights_[node]) {
        fail(ErrorCode::internal_inconsistency, "arrow joins nodes of different weight");
      }
    };
    record(f_[node], f_hit, "f");
    record(v_[node], v_hit, "v");
    if (f_[node] && v_[*f_[node]]) fail(ErrorCode::internal_inconsistency, "v f != 0");
    if (v_[node] && f_[*v_[node]]) fail(ErrorCode::internal_inconsistency, "f v != 0");
    if (!f_[node]) kernel_weight += weights_[node];
  }
  for (std::size_t node = 0; node < size; ++node) {
    if (f_[node].has_value() == v_hit[node]) {
      fail(ErrorCode::internal_inconsistency,
           "ker f and im v differ at node " + std::to_string(node));
    }
  }
  if (total_ % 2 != 0 || 2 * kernel_weight != total_) {
    fail(ErrorCode::internal_inconsistency, "ker f does not carry half the total weight");
  }
}

Subobject image_under_v(const WeightedPermutationModule& m, const Subobject& s) {
  Subobject out{std::vector<bool>(m.size(), false), 0};
  for (std::size_t node = 0; node < m.size(); ++node) {
    if (!s.members[node] || !m.v(node)) continue;
    out.members[*m.v(node)] = true;
    out.dimension += m.weight(node);
  }
  return out;
}

Subobject preimage_under_f(const WeightedPermutationModule& m, const Subobject& s) {
  Subobject out{std::vector<bool>(m.size(), false), 0};
  for (std::size_t node = 0; node < m.size(); ++node) {
    const Arrow& f = m.f(node);
    if (!f || s.members[*f]) {
      out.members[node] = true;
      out.dimension += m.weight(node);
    }
  }
  return out;
}

WeightedPermutationModule from_derham(const DeRhamOperators& ops) {
  const std::size_t size = ops.basis.size();
  std::vector<Arrow> f(size);
  std::vector<Arrow> v(size);
  for (std::size_t index = 0; index < size; ++index) {
    if (ops.frobenius[index]) f[index] = ops.frobenius[index]->target;
    if (ops.verschiebung[index]) v[index] = ops.verschiebung[index]->target;
  }
  return WeightedPermutationModule(std::vector<u64>(size, 1), std::move(f), std::move(v));
}

WeightedPermutationModule from_orbits(const std::vector<Orbit>& orbits, u64 p, unsigned n) {
  const std::uint32_t top = std::uint32_t{1} << n;
  const std::uint32_t modulus = top + 1;
  std::vector<u64> weights(top, 0);
  for (const Orbit& orbit : orbits) {
    if (orbit.n != n) fail(ErrorCode::invalid_argument, "orbit belongs to a different n");
    const u64 m = multiplicity(orbit, p);
    for (std::uint32_t t : orbit.elements) {
      if (weights[t - 1] != 0) fail(ErrorCode::invalid_argument, "orbits overlap");
      weights[t - 1] = m;
    }
  }
  if (std::find(weights.begin(), weights.end(), u64{0}) != weights.end()) {
    fail(ErrorCode::invalid_argument, "orbits do not cover every block");
  }
  std::vector<Arrow> f(top);
  std::vector<Arrow> v(top);
  for (std::uint32_t t = 1; t <= top; ++t) {
    if (2 * t > top) v[t - 1] = 2 * t - modulus - 1;  // node index of B_{2t-2^n-1}
    if (t % 2 == 0) f[t - 1] = t / 2 - 1;
  }
  return WeightedPermutationModule(std::move(weights), std::move(f), std::move(v));
}

std::vector<Subobject> canonical_filtration(const WeightedPermutationModule& m) {
  Subobject zero{std::vector<bool>(m.size(), false), 0};
  Subobject all{std::vector<bool>(m.size(), true), m.total_weight()};

  std::unordered_set<std::vector<bool>> seen;
  std::vector<Subobject> members;
  std::deque<Subobject> queue;
  for (Subobject* s : {&zero, &all}) {
    if (seen.insert(s->members).second) queue.push_back(*s);
  }
  while (!queue.empty()) {
    Subobject s = std::move(queue.front());
    queue.pop_front();
    for (Subobject next : {image_under_v(m, s), preimage_under_f(m, s)}) {
      if (seen.insert(next.members).second) queue.push_back(std::move(next));
    }
    members.push_back(std::move(s));
  }

  std::sort(members.begin(), members.end(),
            [](const Subobject& a, const Subobject& b) { return a.dimension < b.dimension; });
  for (std::size_t k = 1; k < members.size(); ++k) {
    const auto& lower = members[k - 1].members;
    const auto& upper = members[k].members;
    for (std::size_t node = 0; node < m.size(); ++node) {
      if (lower[node] && !upper[node]) {
        fail(ErrorCode::not_a_chain,
             "closure members of dimension " + std::to_string(members[k - 1].dimension) +
                 " and " + std::to_string(members[k].dimension) + " are incomparable");
      }
    }
  }
  return members;
}

u64 EOType::nu_at(u64 i) const {
  if (i < 1 || i > genus) fail(ErrorCode::invalid_argument, "nu index out of range");
  if (!nu.empty()) return nu[i - 1];
  const auto it = std::lower_bound(fragments.begin(), fragments.end(), i,
                                   [](const Fragment& f, u64 idx) { return f.last < idx; });
  return it->value_at(i);
}

void EOType::check_invariants() const {
  u64 expected_first = 1;
  u64 previous = 0;
  for (const Fragment& frag : fragments) {
    if (frag.first != expected_first || frag.last < frag.first || frag.step > 1) {
      fail(ErrorCode::internal_inconsistency, "fragments do not tile [1, g]");
    }
    if (frag.base != previous) fail(ErrorCode::internal_inconsistency, "nu jumps across fragments");
    previous = frag.value_at(frag.last);
    expected_first = frag.last + 1;
  }
  if (expected_first != genus + 1) fail(ErrorCode::internal_inconsistency, "fragments end early");
  if (a_number != genus - previous) fail(ErrorCode::internal_inconsistency, "a-number mismatch");
}

EOType eo_type(const WeightedPermutationModule& m) {
  const std::vector<Subobject> chain = canonical_filtration(m);
  EOType type;
  type.genus = m.genus();
  const u64 g = type.genus;

  u64 prev_dim = 0;
  u64 prev_image = 0;
  for (const Subobject& member : chain) {
    if (member.dimension == 0 || member.dimension > g) continue;
    const u64 image = image_under_v(m, member).dimension;
    const u64 width = member.dimension - prev_dim;
    const u64 rise = image - prev_image;
    Fragment frag{prev_dim + 1, member.dimension, 0, prev_image};
    if (rise == width) {
      frag.step = 1;
    } else if (rise != 0) {
      fail(ErrorCode::non_uniform_fragment,
           "nu rises by " + std::to_string(rise) + " over a fragment of width " +
               std::to_string(width));
    }
    type.fragments.push_back(frag);
    type.key_values.push_back(member.dimension);
    prev_dim = member.dimension;
    prev_image = image;
  }
  if (prev_dim != g) {
    fail(ErrorCode::internal_inconsistency, "canonical filtration has no member of dimension g");
  }

  for (const Fragment& frag : type.fragments) {
    if (frag.step == 1 && frag.base + 1 == frag.first) {
      type.p_rank = std::max(type.p_rank, frag.last);
    } else if (frag.step == 0 && frag.base >= frag.first && frag.base <= frag.last) {
      type.p_rank = std::max(type.p_rank, frag.base);
    }
  }
  type.a_number = g - prev_image;

  if (g <= kMaterializeLimit) {
    type.nu.reserve(g);
    for (const Fragment& frag : type.fragments) {
      for (u64 i = frag.first; i <= frag.last; ++i) type.nu.push_back(frag.value_at(i));
    }
  }
  type.check_invariants();
  return type;
}

}  // namespace hermitian
