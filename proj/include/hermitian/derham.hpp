#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/padic.hpp"

namespace hermitian {

/// (p, n) together with q = p^n and the genus g = q(q-1)/2.
struct CurveParams {
  u64 p = 0;
  unsigned n = 0;
  u64 q = 0;
  u64 genus = 0;

  /// Validates p prime, n >= 1 and that 2g fits comfortably in memory
  /// indices; throws invalid_argument / size_guard.
  static CurveParams make(u64 p, unsigned n);

  u64 basis_size() const noexcept { return 2 * genus; }
};

/// A point (i, j) of the triangle i, j >= 0, i + j <= q - 2.
struct LatticePoint {
  u64 i = 0;
  u64 j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class BasisKind : std::uint8_t { Omega, FTilde };

const char* kind_name(BasisKind kind) noexcept;

/// omega_{i,j} = x^i y^j dx, or the lifted class of 1/(x^i y^j) * y^{q-1}/x.
struct BasisElement {
  BasisKind kind = BasisKind::Omega;
  LatticePoint point;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

std::string to_string(const BasisElement& e);

/// Lattice points of the triangle in lexicographic order.
std::vector<LatticePoint> delta_points(u64 p, unsigned n);

bool in_delta(const LatticePoint& pt, u64 q) noexcept;

/// Index bookkeeping for the 2g-element basis: all omegas (lex), then all
/// lifted classes (lex).
class DeRhamBasis {
 public:
  explicit DeRhamBasis(const CurveParams& params);

  const CurveParams& params() const noexcept { return params_; }
  u64 size() const noexcept { return 2 * params_.genus; }

  u64 index_of(const BasisElement& e) const;
  BasisElement element_at(u64 index) const;

 private:
  CurveParams params_;
  std::vector<LatticePoint> points_;
};

/// Image of a basis element under F or V: either zero or a nonzero
/// scalar (in F_p) times one basis element.
struct BasisImage {
  BasisElement target;
  u64 scalar = 0;
};
using MaybeImage = std::optional<BasisImage>;

MaybeImage v_on_omega(const BasisElement& e, const CurveParams& params);
MaybeImage f_on_ftilde(const BasisElement& e, const CurveParams& params);
MaybeImage v_on_ftilde(const BasisElement& e, const CurveParams& params);
MaybeImage f_on_omega(const BasisElement& e);

/// True when F on this lifted class lands on a lifted class again (the
/// "case A" branch of the Frobenius formula).
bool frobenius_case_a(const LatticePoint& pt, const CurveParams& params);

/// A scaled-permutation operator on the basis. Twist +1 marks a p-linear
/// map, -1 a p^{-1}-linear one; over F_p it only matters as a label.
class SemilinearMap {
 public:
  struct Entry {
    std::uint32_t target;
    std::uint32_t scalar;
  };

  SemilinearMap(int twist, u64 prime, std::vector<std::optional<Entry>> images);

  int twist() const noexcept { return twist_; }
  u64 prime() const noexcept { return prime_; }
  std::size_t size() const noexcept { return images_.size(); }
  const std::optional<Entry>& operator[](std::size_t index) const { return images_[index]; }
  const std::vector<std::optional<Entry>>& images() const noexcept { return images_; }

  /// Throws internal_inconsistency unless every scalar is a nonzero
  /// residue and no two sources share a target.
  void check_scaled_permutation() const;

  std::size_t rank() const;

 private:
  int twist_;
  u64 prime_;
  std::vector<std::optional<Entry>> images_;
};

struct DeRhamOperators {
  DeRhamBasis basis;
  SemilinearMap frobenius;
  SemilinearMap verschiebung;
};

/// Builds F and V on the full basis and checks the structural relations
/// (scaled permutation, FV = VF = 0, ker F = im V = span of omegas).
DeRhamOperators build_operators(u64 p, unsigned n);

/// Number of omegas whose image under V^iterations is nonzero.
u64 iterated_cartier_rank(const DeRhamOperators& ops, unsigned iterations);

/// r_{n,i} = p^n (p+1)^i (p^{n-i} - 1) / 2^{i+1}.
u64 cartier_rank_formula(u64 p, unsigned n, unsigned i);

/// g - r_{n,1} = p^n (p^{n-1} + 1)(p - 1) / 4.
u64 a_number_formula(u64 p, unsigned n);

/// Cartier operator on x^i y^j dx by direct polynomial manipulation on
/// y^q + y = x^{q+1}. Independent of the closed-form digit formulas; meant
/// for q <= 32 (throws size_guard above 64).
MaybeImage cartier_oracle(const BasisElement& e, const CurveParams& params);

}  // namespace hermitian
