// Cartier operator on the Hermitian curve by brute-force polynomial
// arithmetic. Shares nothing with the closed-form operators except the
// basis conventions, so the two can be checked against each other.

#include <map>
#include <string>
#include <utility>

#include "hermitian/derham.hpp"
#include "hermitian/error.hpp"

namespace hermitian {

namespace {

// Sparse polynomial in F_p[x, y], keyed by (y-degree, x-degree).
class Poly {
 public:
  explicit Poly(u64 p) : p_(p) {}

  static Poly monomial(u64 p, u64 x_deg, u64 y_deg, u64 coeff) {
    Poly out(p);
    out.add(x_deg, y_deg, coeff);
    return out;
  }

  void add(u64 x_deg, u64 y_deg, u64 coeff) {
    coeff %= p_;
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({y_deg, x_deg}, coeff);
    if (!inserted) {
      it->second = (it->second + coeff) % p_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator*(const Poly& other) const {
    Poly out(p_);
    for (const auto& [a, ca] : terms_) {
      for (const auto& [b, cb] : other.terms_) {
        out.add(a.second + b.second, a.first + b.first, ca * cb % p_);
      }
    }
    return out;
  }

  /// Rewrites y^q = x^{q+1} - y until every y-degree is below q.
  void reduce(u64 q) {
    while (!terms_.empty()) {
      auto last = std::prev(terms_.end());
      const auto [y_deg, x_deg] = last->first;
      if (y_deg < q) break;
      const u64 coeff = last->second;
      terms_.erase(last);
      add(x_deg + q + 1, y_deg - q, coeff);
      add(x_deg, y_deg - q + 1, p_ - coeff);
    }
  }

  const std::map<std::pair<u64, u64>, u64>& terms() const noexcept { return terms_; }

 private:
  u64 p_;
  std::map<std::pair<u64, u64>, u64> terms_;
};

}  // namespace

MaybeImage cartier_oracle(const BasisElement& e, const CurveParams& params) {
  if (e.kind != BasisKind::Omega) {
    fail(ErrorCode::invalid_argument, "cartier_oracle applies to omegas only");
  }
  if (params.q > 64) {
    fail(ErrorCode::size_guard, "cartier_oracle is limited to q <= 64");
  }
  if (!in_delta(e.point, params.q)) {
    fail(ErrorCode::invalid_argument, to_string(e) + " is not a basis element");
  }
  const u64 p = params.p;
  const u64 q = params.q;

  // x is a p-basis; y = x * (x^{q/p})^p - (y^{q/p})^p, so substituting
  // y = x^{q+1} - y^q leaves every y-exponent a multiple of q.
  Poly y_in_p_basis(p);
  y_in_p_basis.add(q + 1, 0, 1);
  y_in_p_basis.add(0, q, p - 1);

  Poly integrand = Poly::monomial(p, e.point.i, 0, 1);
  for (u64 k = 0; k < e.point.j; ++k) integrand = integrand * y_in_p_basis;

  // C(h^p x^r dx) = h C(x^r dx), and C(x^r dx) = x^{(r+1)/p - 1} dx exactly
  // when r = -1 mod p.
  Poly image(p);
  for (const auto& [key, coeff] : integrand.terms()) {
    const auto [y_deg, x_deg] = key;
    if (y_deg % p != 0) {
      fail(ErrorCode::internal_inconsistency, "y-exponent not a p-th power in oracle");
    }
    if ((x_deg + 1) % p != 0) continue;
    // Coefficients lie in F_p, where the p^{-1}-linear twist is trivial.
    image.add((x_deg + 1) / p - 1, y_deg / p, coeff);
  }
  image.reduce(q);

  if (image.terms().empty()) return std::nullopt;
  if (image.terms().size() != 1) {
    fail(ErrorCode::internal_inconsistency,
         "Cartier image of " + to_string(e) + " is not a single basis monomial");
  }
  const auto& [key, coeff] = *image.terms().begin();
  const LatticePoint target{key.second, key.first};
  if (!in_delta(target, q)) {
    fail(ErrorCode::internal_inconsistency,
         "Cartier image of " + to_string(e) + " is not a regular basis differential");
  }
  return BasisImage{BasisElement{BasisKind::Omega, target}, coeff};
}

}  // namespace hermitian
