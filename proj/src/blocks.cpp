#include "hermitian/blocks.hpp"

#include "hermitian/error.hpp"

namespace hermitian {

std::string to_string(const BinaryVector& v) {
  std::string out = "(";
  for (unsigned h = 0; h < v.size(); ++h) {
    if (h) out += ",";
    out += static_cast<char>('0' + v.bits[h]);
  }
  return out + ")";
}

BinaryVector binary_vector(const BasisElement& e, const CurveParams& params) {
  BinaryVector v;
  v.bits.resize(params.n);
  for (unsigned h = 0; h + 1 < params.n; ++h) {
    v.bits[h] = static_cast<std::uint8_t>(carry_bit(e.point.i, e.point.j, params.p, params.n, h));
  }
  v.bits[params.n - 1] = e.kind == BasisKind::Omega ? 1 : 0;
  return v;
}

BlockId t_of_vector(const BinaryVector& v) {
  const unsigned n = v.size();
  if (n == 0 || n > 30) fail(ErrorCode::invalid_argument, "binary vector length out of range");
  std::uint32_t weighted = 0;
  for (unsigned h = 0; h + 1 < n; ++h) weighted += std::uint32_t{v.bits[h]} << (n - 1 - h);
  if (v.bits[n - 1]) return BlockId{weighted + 1};
  return BlockId{(std::uint32_t{1} << n) - weighted};
}

BinaryVector vector_of_t(BlockId t, unsigned n) {
  if (n == 0 || n > 30) fail(ErrorCode::invalid_argument, "n out of range");
  const std::uint32_t top = std::uint32_t{1} << n;
  if (t.t < 1 || t.t > top) fail(ErrorCode::invalid_argument, "block label out of range");
  const std::uint32_t weighted = t.is_omega() ? t.t - 1 : top - t.t;
  BinaryVector v;
  v.bits.resize(n);
  for (unsigned h = 0; h + 1 < n; ++h) v.bits[h] = (weighted >> (n - 1 - h)) & 1U;
  v.bits[n - 1] = t.is_omega() ? 1 : 0;
  return v;
}

u64 block_dim(BlockId t, u64 p, unsigned n) {
  const BinaryVector v = vector_of_t(t, n);
  std::vector<std::uint8_t> aug;
  aug.push_back(1);
  for (unsigned h = 0; h + 1 < n; ++h) aug.push_back(v.bits[h]);
  aug.push_back(0);
  unsigned same = 0;
  unsigned different = 0;
  for (std::size_t k = 1; k < aug.size(); ++k) (aug[k] == aug[k - 1] ? same : different)++;
  return checked_pow(p * (p + 1) / 2, same) * checked_pow(p * (p - 1) / 2, different);
}

std::optional<BinaryVector> shifted_by_v(const BinaryVector& b) {
  const unsigned n = b.size();
  const bool omega = b.bits[n - 1] == 1;
  if (n == 1) {
    if (omega) return std::nullopt;
    return BinaryVector{{1}};
  }
  BinaryVector out;
  out.bits.resize(n);
  if (omega) {
    if (b.bits[0] == 0) return std::nullopt;
    // left shift, last two positions (0, 1)
    for (unsigned h = 0; h + 2 < n; ++h) out.bits[h] = b.bits[h + 1];
    out.bits[n - 2] = 0;
    out.bits[n - 1] = 1;
  } else {
    if (b.bits[0] == 1) return std::nullopt;
    // left shift with every position flipped, ending (1, 1)
    for (unsigned h = 0; h + 2 < n; ++h) out.bits[h] = 1 - b.bits[h + 1];
    out.bits[n - 2] = 1;
    out.bits[n - 1] = 1;
  }
  return out;
}

std::optional<BinaryVector> shifted_by_f(const BinaryVector& b) {
  const unsigned n = b.size();
  if (b.bits[n - 1] == 1) return std::nullopt;
  if (n == 1) return BinaryVector{{1}};
  BinaryVector out;
  out.bits.resize(n);
  if (b.bits[n - 2] == 0) {
    out.bits[0] = 1;
    for (unsigned h = 1; h + 1 < n; ++h) out.bits[h] = b.bits[h - 1];
    out.bits[n - 1] = 0;
  } else {
    out.bits[0] = 0;
    for (unsigned h = 1; h + 1 < n; ++h) out.bits[h] = 1 - b.bits[h - 1];
    out.bits[n - 1] = 1;
  }
  return out;
}

std::vector<BlockId> assign_blocks(const DeRhamBasis& basis) {
  std::vector<BlockId> blocks(basis.size());
  for (u64 index = 0; index < basis.size(); ++index) {
    blocks[index] = t_of_vector(binary_vector(basis.element_at(index), basis.params()));
  }
  return blocks;
}

BlockActionReport verify_block_action(const DeRhamOperators& ops) {
  const CurveParams& params = ops.basis.params();
  const unsigned n = params.n;
  const std::uint32_t modulus = (std::uint32_t{1} << n) + 1;
  const std::uint32_t half = std::uint32_t{1} << (n - 1);

  std::vector<BinaryVector> vectors(ops.basis.size());
  std::vector<BlockId> blocks(ops.basis.size());
  std::vector<u64> counts(modulus, 0);
  for (u64 index = 0; index < ops.basis.size(); ++index) {
    vectors[index] = binary_vector(ops.basis.element_at(index), params);
    blocks[index] = t_of_vector(vectors[index]);
    ++counts[blocks[index].t];
  }

  BlockActionReport report;
  auto violate = [&](u64 index, const std::string& what) {
    report.ok = false;
    report.violation = to_string(ops.basis.element_at(index)) + " in B_" +
                       std::to_string(blocks[index].t) + ": " + what;
    return report;
  };

  for (std::uint32_t t = 1; t < modulus; ++t) {
    const u64 expected = block_dim(BlockId{t}, params.p, n);
    if (counts[t] != expected) {
      report.ok = false;
      report.violation = "B_" + std::to_string(t) + " has " + std::to_string(counts[t]) +
                         " elements, expected " + std::to_string(expected);
      return report;
    }
  }

  // Injectivity of the index maps plus equal block sizes makes each
  // nonzero restriction a bijection between blocks.
  for (u64 index = 0; index < ops.basis.size(); ++index) {
    const std::uint32_t t = blocks[index].t;
    const auto& v = ops.verschiebung[index];
    const auto& f = ops.frobenius[index];

    if (t <= half) {
      if (v) return violate(index, "V should vanish");
    } else {
      if (!v) return violate(index, "V should be nonzero");
      const std::uint32_t expected = 2 * t - modulus;
      if (blocks[v->target].t != expected) {
        return violate(index, "V lands in B_" + std::to_string(blocks[v->target].t) +
                                  ", expected B_" + std::to_string(expected));
      }
    }

    if (t % 2 == 1) {
      if (f) return violate(index, "F should vanish");
    } else {
      if (!f) return violate(index, "F should be nonzero");
      if (blocks[f->target].t != t / 2) {
        return violate(index, "F lands in B_" + std::to_string(blocks[f->target].t) +
                                  ", expected B_" + std::to_string(t / 2));
      }
    }

    const auto v_shift = shifted_by_v(vectors[index]);
    if (v_shift.has_value() != v.has_value() || (v && *v_shift != vectors[v->target])) {
      return violate(index, "V carry pattern disagrees with the shift rule");
    }
    const auto f_shift = shifted_by_f(vectors[index]);
    if (f_shift.has_value() != f.has_value() || (f && *f_shift != vectors[f->target])) {
      return violate(index, "F carry pattern disagrees with the shift rule");
    }
  }
  return report;
}

}  // namespace hermitian
