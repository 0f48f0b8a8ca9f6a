#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/derham.hpp"

namespace hermitian {

/// Carry pattern (b_0, ..., b_{n-1}) of a basis element; the last bit is
/// 1 for omegas and 0 for lifted classes.
struct BinaryVector {
  std::vector<std::uint8_t> bits;

  unsigned size() const noexcept { return static_cast<unsigned>(bits.size()); }
  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
};

std::string to_string(const BinaryVector& v);

/// Block label t in [1, 2^n]. Odd labels are omega blocks.
struct BlockId {
  std::uint32_t t = 0;

  bool is_omega() const noexcept { return t % 2 == 1; }
  friend bool operator==(const BlockId&, const BlockId&) = default;
  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

BinaryVector binary_vector(const BasisElement& e, const CurveParams& params);

BlockId t_of_vector(const BinaryVector& v);
BinaryVector vector_of_t(BlockId t, unsigned n);

/// (p(p+1)/2)^{n_s} (p(p-1)/2)^{n_d} over the adjacent pairs of
/// (1, b_0, ..., b_{n-2}, 0).
u64 block_dim(BlockId t, u64 p, unsigned n);

/// Expected carry pattern after applying V or F, or nullopt when the
/// operator kills the whole block. Handles n = 1 separately since there
/// are no carry coordinates then.
std::optional<BinaryVector> shifted_by_v(const BinaryVector& b);
std::optional<BinaryVector> shifted_by_f(const BinaryVector& b);

/// Block label of every basis index, in basis order.
std::vector<BlockId> assign_blocks(const DeRhamBasis& basis);

struct BlockActionReport {
  bool ok = true;
  std::string violation;  // first failing element, empty when ok
};

/// Checks, element by element, that V kills B_t for t <= 2^{n-1} and maps
/// B_t onto B_{2t-2^n-1} otherwise, that F kills odd blocks and maps B_t
/// onto B_{t/2} for even t, that the observed carry patterns follow the
/// shift rules, and that every block has the counted dimension.
BlockActionReport verify_block_action(const DeRhamOperators& ops);

}  // namespace hermitian
