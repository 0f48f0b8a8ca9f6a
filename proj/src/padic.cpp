#include "hermitian/padic.hpp"

#include <limits>
#include <string>

#include "hermitian/error.hpp"

namespace hermitian {

bool is_prime(u64 p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (u64 d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

u64 checked_pow(u64 base, unsigned exponent) {
  u64 result = 1;
  for (unsigned e = 0; e < exponent; ++e) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base) {
      fail(ErrorCode::size_guard, std::to_string(base) + "^" + std::to_string(exponent) +
                                      " exceeds 64-bit range");
    }
    result *= base;
  }
  return result;
}

u64 binomial_mod_p(u64 top, u64 bottom, u64 p) {
  if (bottom > top) return 0;
  u64 result = 1;
  while (top > 0 || bottom > 0) {
    const u64 a = top % p;
    const u64 b = bottom % p;
    if (b > a) return 0;
    // C(a, b) for a < p by the multiplicative formula; p is small.
    u64 num = 1;
    u64 den = 1;
    for (u64 k = 0; k < b; ++k) {
      num = num * ((a - k) % p) % p;
      den = den * ((k + 1) % p) % p;
    }
    // den is a unit mod p; invert by Fermat.
    u64 inv = 1;
    u64 base = den;
    for (u64 e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    result = result * (num * inv % p) % p;
    top /= p;
    bottom /= p;
  }
  return result;
}

PAdicDigits::PAdicDigits(u64 value, u64 prime, unsigned length, std::vector<u64> digits)
    : value_(value), prime_(prime), length_(length), digits_(std::move(digits)) {}

u64 PAdicDigits::truncation(unsigned h) const {
  if (h > length_) fail(ErrorCode::invalid_argument, "truncation index out of range");
  u64 sum = 0;
  u64 power = 1;
  for (unsigned l = 0; l < h; ++l) {
    sum += digits_[l] * power;
    power *= prime_;
  }
  return sum;
}

u64 PAdicDigits::tail(unsigned h) const {
  if (h < 1 || h > length_) fail(ErrorCode::invalid_argument, "tail index out of range");
  u64 sum = 0;
  u64 power = 1;
  for (unsigned l = 1; l < h; ++l) {
    sum += digits_[l] * power;
    power *= prime_;
  }
  return sum;
}

u64 PAdicDigits::reassemble() const { return truncation(length_); }

PAdicDigits expand(u64 m, u64 p, unsigned n) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::invalid_argument, "digit length must be positive");
  const u64 q = checked_pow(p, n);
  if (m >= q) {
    fail(ErrorCode::invalid_argument,
         std::to_string(m) + " does not fit in " + std::to_string(n) + " base-" +
             std::to_string(p) + " digits");
  }
  std::vector<u64> digits(n);
  u64 rest = m;
  for (unsigned h = 0; h < n; ++h) {
    digits[h] = rest % p;
    rest /= p;
  }
  return PAdicDigits(m, p, n, std::move(digits));
}

unsigned carry_bit(u64 i, u64 j, u64 p, unsigned n, unsigned h) {
  if (n < 2 || h > n - 2) {
    fail(ErrorCode::invalid_argument,
         "carry index " + std::to_string(h) + " out of range for n = " + std::to_string(n));
  }
  const u64 q = checked_pow(p, n);
  if (i + j + 2 > q) fail(ErrorCode::invalid_argument, "i + j exceeds p^n - 2");
  const u64 modulus = checked_pow(p, h + 1);
  return (i % modulus) + (j % modulus) < modulus - 1 ? 0U : 1U;
}

DigitCarryPredicates digit_carry_predicates(u64 i, u64 j, u64 p, unsigned n, unsigned h) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  const u64 q = checked_pow(p, n);
  if (i < 1 || j < 1 || i > q || j > q) {
    fail(ErrorCode::invalid_argument, "carry predicates require 1 <= i, j <= p^n");
  }
  if (h < 1 || h + 1 > n) {
    fail(ErrorCode::invalid_argument, "carry predicates require 1 <= h <= n - 1");
  }
  const u64 ph = checked_pow(p, h);
  const u64 ph1 = ph * p;

  // Integer forms of the digit sums; i = p^n is allowed and has zero digits.
  const u64 i0 = i % p;
  const u64 j0 = j % p;
  const u64 i_trunc_h = i % ph;
  const u64 j_trunc_h = j % ph;
  const u64 i_trunc_h1 = i % ph1;
  const u64 j_trunc_h1 = j % ph1;
  const u64 i_tail = i_trunc_h1 / p;  // digits 1..h
  const u64 j_tail = j_trunc_h1 / p;
  const u64 j_top = (j / (q / p)) % p;  // j_{n-1}

  const bool low_carry = i0 + j0 >= p - 1;

  DigitCarryPredicates out;

  out.tail_vs_truncation.lhs = i_tail + j_tail < ph - 1;
  out.tail_vs_truncation.rhs = i_trunc_h1 + j_trunc_h1 < ph1 - 1;
  out.tail_vs_truncation.converse_applies = low_carry;

  out.truncation_vs_complement.lhs = i_trunc_h1 + j_trunc_h1 < ph1 - 1;
  // (p^h - 1 - a) + (p^h - 1 - b) >= p^h - 1; the terms can go negative.
  const auto sph = static_cast<std::int64_t>(ph);
  out.truncation_vs_complement.rhs = (sph - 1 - static_cast<std::int64_t>(i_tail)) +
                                         (sph - 1 - static_cast<std::int64_t>(j_tail)) >=
                                     sph - 1;
  out.truncation_vs_complement.converse_applies = !low_carry;

  const u64 trunc_sum = i_trunc_h + j_trunc_h;
  const bool below = trunc_sum < ph - 1;

  out.frobenius_case_a.lhs = below;
  out.frobenius_case_a.rhs = p - 1 + j_top + p * trunc_sum < ph1 - 1;
  out.frobenius_case_a.converse_applies = true;

  out.frobenius_case_b.lhs = below;
  const std::int64_t case_b_value = 2 * static_cast<std::int64_t>(ph1) - 2 -
                                    static_cast<std::int64_t>(trunc_sum * p) -
                                    static_cast<std::int64_t>(p) -
                                    static_cast<std::int64_t>(j_top);
  out.frobenius_case_b.rhs = case_b_value >= static_cast<std::int64_t>(ph1) - 1;
  out.frobenius_case_b.converse_applies = true;

  return out;
}

}  // namespace hermitian
