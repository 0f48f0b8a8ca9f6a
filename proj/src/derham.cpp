#include "hermitian/derham.hpp"

#include <string>

#include "hermitian/error.hpp"

namespace hermitian {

namespace {

// (-1)^e * value, reduced into [0, p).
u64 signed_mod(u64 value, u64 exponent, u64 p) {
  value %= p;
  if (exponent % 2 == 1 && value != 0) value = p - value;
  return value;
}

MaybeImage checked_image(BasisKind kind, u64 i, u64 j, u64 scalar, const CurveParams& params,
                         const BasisElement& source, const char* op) {
  const LatticePoint target{i, j};
  if (!in_delta(target, params.q)) {
    fail(ErrorCode::internal_inconsistency,
         std::string(op) + " sends " + to_string(source) + " outside the triangle");
  }
  if (scalar % params.p == 0) {
    fail(ErrorCode::internal_inconsistency,
         std::string(op) + " has a vanishing scalar on " + to_string(source));
  }
  return BasisImage{BasisElement{kind, target}, scalar % params.p};
}

void require_kind(const BasisElement& e, BasisKind kind, const char* op) {
  if (e.kind != kind) {
    fail(ErrorCode::invalid_argument, std::string(op) + " applied to " + to_string(e));
  }
}

}  // namespace

CurveParams CurveParams::make(u64 p, unsigned n) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::invalid_argument, "n must be positive");
  CurveParams params;
  params.p = p;
  params.n = n;
  params.q = checked_pow(p, n);
  // Basis indices are 32-bit.
  if (params.q > (u64{1} << 16)) {
    fail(ErrorCode::size_guard, "q = " + std::to_string(params.q) + " is too large");
  }
  params.genus = params.q * (params.q - 1) / 2;
  return params;
}

const char* kind_name(BasisKind kind) noexcept {
  return kind == BasisKind::Omega ? "omega" : "ftilde";
}

std::string to_string(const BasisElement& e) {
  return std::string(kind_name(e.kind)) + "(" + std::to_string(e.point.i) + "," +
         std::to_string(e.point.j) + ")";
}

bool in_delta(const LatticePoint& pt, u64 q) noexcept { return pt.i + pt.j + 2 <= q; }

std::vector<LatticePoint> delta_points(u64 p, unsigned n) {
  const CurveParams params = CurveParams::make(p, n);
  std::vector<LatticePoint> points;
  points.reserve(params.genus);
  for (u64 i = 0; i + 2 <= params.q; ++i) {
    for (u64 j = 0; i + j + 2 <= params.q; ++j) points.push_back({i, j});
  }
  return points;
}

DeRhamBasis::DeRhamBasis(const CurveParams& params)
    : params_(params), points_(delta_points(params.p, params.n)) {}

u64 DeRhamBasis::index_of(const BasisElement& e) const {
  const u64 q = params_.q;
  if (!in_delta(e.point, q)) {
    fail(ErrorCode::invalid_argument, to_string(e) + " is not a basis element");
  }
  // Rows i' < i contribute q - 1 - i' points each.
  const u64 i = e.point.i;
  const u64 lex = i * (q - 1) - i * (i - (i > 0 ? 1 : 0)) / 2 + e.point.j;
  return e.kind == BasisKind::Omega ? lex : params_.genus + lex;
}

BasisElement DeRhamBasis::element_at(u64 index) const {
  if (index >= size()) fail(ErrorCode::invalid_argument, "basis index out of range");
  if (index < params_.genus) return {BasisKind::Omega, points_[index]};
  return {BasisKind::FTilde, points_[index - params_.genus]};
}

MaybeImage v_on_omega(const BasisElement& e, const CurveParams& params) {
  require_kind(e, BasisKind::Omega, "v_on_omega");
  const u64 p = params.p;
  const u64 top = params.q / p;  // p^{n-1}
  const u64 i0 = e.point.i % p;
  const u64 j0 = e.point.j % p;
  if (i0 + j0 < p - 1) return std::nullopt;
  const u64 excess = i0 + j0 - (p - 1);
  const u64 scalar = signed_mod(binomial_mod_p(j0, excess, p), excess, p);
  return checked_image(BasisKind::Omega, top * (p - 1 - i0) + e.point.i / p,
                       top * excess + e.point.j / p, scalar, params, e, "v_on_omega");
}

bool frobenius_case_a(const LatticePoint& pt, const CurveParams& params) {
  const u64 top = params.q / params.p;
  return (pt.i % top) + (pt.j % top) + 1 < top;
}

MaybeImage f_on_ftilde(const BasisElement& e, const CurveParams& params) {
  require_kind(e, BasisKind::FTilde, "f_on_ftilde");
  const u64 p = params.p;
  const u64 q = params.q;
  const u64 top = q / p;
  const u64 i_low = e.point.i % top;  // i_{n-1}^+
  const u64 j_low = e.point.j % top;
  const u64 i_hi = e.point.i / top;   // i_{n-1}
  const u64 j_hi = e.point.j / top;
  if (i_hi + j_hi > p - 1) {
    fail(ErrorCode::internal_inconsistency, "leading digits of " + to_string(e) + " overflow");
  }
  const u64 l_star = p - 1 - j_hi - i_hi;
  const u64 c = signed_mod(binomial_mod_p(p - 1 - j_hi, l_star, p), l_star, p);
  const u64 new_i = p * i_low + (p - 1) - i_hi;
  const u64 new_j = p * j_low + j_hi + i_hi;
  if (frobenius_case_a(e.point, params)) {
    return checked_image(BasisKind::FTilde, new_i, new_j, c, params, e, "f_on_ftilde");
  }
  // d = -(j_{n-1} + i_{n-1} + 1) c
  const u64 d = signed_mod((j_hi + i_hi + 1) % p * c, 1, p);
  if (new_i > q - 1 || new_j + 1 > q - 1) {
    fail(ErrorCode::internal_inconsistency, "f_on_ftilde index underflow at " + to_string(e));
  }
  return checked_image(BasisKind::Omega, (q - 1) - new_i, (q - 1) - (new_j + 1), d, params, e,
                       "f_on_ftilde");
}

MaybeImage v_on_ftilde(const BasisElement& e, const CurveParams& params) {
  require_kind(e, BasisKind::FTilde, "v_on_ftilde");
  const u64 p = params.p;
  const u64 top = params.q / p;
  const u64 i0 = e.point.i % p;
  const u64 j0 = e.point.j % p;
  if (i0 + j0 >= p - 1) return std::nullopt;
  const u64 i_tail = e.point.i / p;
  const u64 j_tail = e.point.j / p;
  const u64 exponent = p - 2 - i0 - j0;
  const u64 scalar =
      signed_mod((i0 + 1) % p * binomial_mod_p(p - 1 - j0, exponent, p), exponent, p);
  return checked_image(BasisKind::Omega, top * i0 + (top - 1 - i_tail),
                       top * exponent + (top - 1 - j_tail), scalar, params, e, "v_on_ftilde");
}

MaybeImage f_on_omega(const BasisElement& e) {
  require_kind(e, BasisKind::Omega, "f_on_omega");
  return std::nullopt;
}

SemilinearMap::SemilinearMap(int twist, u64 prime, std::vector<std::optional<Entry>> images)
    : twist_(twist), prime_(prime), images_(std::move(images)) {
  if (twist != 1 && twist != -1) fail(ErrorCode::invalid_argument, "twist must be +1 or -1");
}

void SemilinearMap::check_scaled_permutation() const {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t src = 0; src < images_.size(); ++src) {
    const auto& entry = images_[src];
    if (!entry) continue;
    if (entry->target >= images_.size()) {
      fail(ErrorCode::internal_inconsistency, "image index out of range");
    }
    if (entry->scalar % prime_ == 0) {
      fail(ErrorCode::internal_inconsistency,
           "zero scalar at source " + std::to_string(src));
    }
    if (hit[entry->target]) {
      fail(ErrorCode::internal_inconsistency,
           "two sources share target " + std::to_string(entry->target));
    }
    hit[entry->target] = true;
  }
}

std::size_t SemilinearMap::rank() const {
  std::size_t count = 0;
  for (const auto& entry : images_) count += entry.has_value() ? 1 : 0;
  return count;
}

DeRhamOperators build_operators(u64 p, unsigned n) {
  const CurveParams params = CurveParams::make(p, n);
  DeRhamBasis basis(params);
  const u64 size = basis.size();

  using Entry = SemilinearMap::Entry;
  std::vector<std::optional<Entry>> f_images(size);
  std::vector<std::optional<Entry>> v_images(size);

  auto to_entry = [&](const MaybeImage& image) -> std::optional<Entry> {
    if (!image) return std::nullopt;
    return Entry{static_cast<std::uint32_t>(basis.index_of(image->target)),
                 static_cast<std::uint32_t>(image->scalar)};
  };

  for (u64 index = 0; index < size; ++index) {
    const BasisElement e = basis.element_at(index);
    if (e.kind == BasisKind::Omega) {
      f_images[index] = to_entry(f_on_omega(e));
      v_images[index] = to_entry(v_on_omega(e, params));
    } else {
      f_images[index] = to_entry(f_on_ftilde(e, params));
      v_images[index] = to_entry(v_on_ftilde(e, params));
    }
  }

  DeRhamOperators ops{std::move(basis), SemilinearMap(+1, p, std::move(f_images)),
                      SemilinearMap(-1, p, std::move(v_images))};
  ops.frobenius.check_scaled_permutation();
  ops.verschiebung.check_scaled_permutation();

  const u64 g = params.genus;
  std::vector<bool> in_image_of_v(size, false);
  for (u64 index = 0; index < size; ++index) {
    const auto& f = ops.frobenius[index];
    const auto& v = ops.verschiebung[index];
    if (f && ops.verschiebung[f->target]) {
      fail(ErrorCode::internal_inconsistency, "VF != 0 at index " + std::to_string(index));
    }
    if (v && ops.frobenius[v->target]) {
      fail(ErrorCode::internal_inconsistency, "FV != 0 at index " + std::to_string(index));
    }
    const bool killed_by_f = !f.has_value();
    if (killed_by_f != (index < g)) {
      fail(ErrorCode::internal_inconsistency, "ker F differs from the omega span");
    }
    if (v) in_image_of_v[v->target] = true;
  }
  for (u64 index = 0; index < size; ++index) {
    if (in_image_of_v[index] != (index < g)) {
      fail(ErrorCode::internal_inconsistency, "im V differs from the omega span");
    }
  }
  return ops;
}

u64 iterated_cartier_rank(const DeRhamOperators& ops, unsigned iterations) {
  const u64 g = ops.basis.params().genus;
  u64 rank = 0;
  for (u64 index = 0; index < g; ++index) {
    std::optional<u64> current = index;
    for (unsigned step = 0; step < iterations && current; ++step) {
      const auto& image = ops.verschiebung[*current];
      current = image ? std::optional<u64>(image->target) : std::nullopt;
    }
    if (current) ++rank;
  }
  return rank;
}

u64 cartier_rank_formula(u64 p, unsigned n, unsigned i) {
  if (i > n) fail(ErrorCode::invalid_argument, "iterate exceeds n");
  unsigned __int128 value = checked_pow(p, n);
  value *= checked_pow(p + 1, i);
  value *= checked_pow(p, n - i) - 1;
  value >>= (i + 1);
  return static_cast<u64>(value);
}

u64 a_number_formula(u64 p, unsigned n) {
  unsigned __int128 value = checked_pow(p, n);
  value *= checked_pow(p, n - 1) + 1;
  value *= p - 1;
  return static_cast<u64>(value / 4);
}

}  // namespace hermitian
