#pragma once

#include <cstdint>
#include <vector>

namespace hermitian {

using u64 = std::uint64_t;

bool is_prime(u64 p) noexcept;

/// p^e, throwing size_guard if the result does not fit in 64 bits.
u64 checked_pow(u64 base, unsigned exponent);

/// Binomial coefficient reduced mod p, computed digit-wise (Lucas).
u64 binomial_mod_p(u64 top, u64 bottom, u64 p);

/// Base-p expansion of a value below p^n, least significant digit first.
class PAdicDigits {
 public:
  PAdicDigits(u64 value, u64 prime, unsigned length, std::vector<u64> digits);

  u64 value() const noexcept { return value_; }
  u64 prime() const noexcept { return prime_; }
  unsigned length() const noexcept { return length_; }
  const std::vector<u64>& digits() const noexcept { return digits_; }

  /// m_h, or 0 above the stored length.
  u64 digit(unsigned h) const noexcept { return h < length_ ? digits_[h] : 0; }

  /// m_h^+ = sum_{l<h} m_l p^l, for 0 <= h <= n.
  u64 truncation(unsigned h) const;

  /// m_h^T = sum_{1<=l<h} m_l p^{l-1}, for 1 <= h <= n.
  u64 tail(unsigned h) const;

  u64 reassemble() const;

 private:
  u64 value_;
  u64 prime_;
  unsigned length_;
  std::vector<u64> digits_;
};

PAdicDigits expand(u64 m, u64 p, unsigned n);

/// b_h(i,j): 1 iff i_{h+1}^+ + j_{h+1}^+ >= p^{h+1} - 1, i.e. iff adding one
/// to i+j carries out of digit h. Requires 0 <= h <= n-2 and i+j <= p^n-2.
unsigned carry_bit(u64 i, u64 j, u64 p, unsigned n, unsigned h);

/// Both sides of one implication of the digit lemma, plus its side
/// condition (whether the converse is claimed for this (i,j)).
struct Implication {
  bool lhs = false;
  bool rhs = false;
  bool converse_applies = false;

  bool forward_holds() const noexcept { return !lhs || rhs; }
  bool converse_holds() const noexcept { return !converse_applies || !rhs || lhs; }
};

struct DigitCarryPredicates {
  Implication tail_vs_truncation;        // (1)
  Implication truncation_vs_complement;  // (2)
  Implication frobenius_case_a;          // (3), an equivalence
  Implication frobenius_case_b;          // (4), an equivalence
};

/// Evaluates the four carry statements relating tails and truncations of
/// i and j at level h. Requires 1 <= i,j <= p^n and 1 <= h <= n-1.
///
/// Statements (1) and (2) read the tail as the digits 1..h of i, which is
/// tail(h+1) in the PAdicDigits convention; that is the form in which they
/// are used to track carry bits under V.
DigitCarryPredicates digit_carry_predicates(u64 i, u64 j, u64 p, unsigned n, unsigned h);

}  // namespace hermitian
