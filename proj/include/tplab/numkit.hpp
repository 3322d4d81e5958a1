#pragma once

// Exact integer helpers shared by every engine. All arithmetic on Nat/Int is
// overflow-checked; an overflow throws OverflowError instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tplab {

using Nat = unsigned __int128;
using Int = __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Thrown when an identity promises an exact quotient and the remainder is not zero.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Nat checked_add(Nat a, Nat b);
Nat checked_sub(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// a / b, throwing InexactDivision when b does not divide a.
Nat exact_div(Nat a, Nat b);
Int exact_div(Int a, Int b);

Nat ipow(Nat base, unsigned exponent);
Int ipow(Int base, unsigned exponent);
Nat pow2(unsigned k);
inline Nat pow3(unsigned k) { return ipow(Nat{3}, k); }

/// Number of 1 bits in the binary expansion of n (A000120).
unsigned binary_weight(Nat n);

/// Number of binary digits of n; bit_length(0) == 0.
unsigned bit_length(Nat n);

/// n choose k, with binomial(n, k) == 0 for k > n.
Nat binomial(Nat n, Nat k);

/// 2-adic valuation of a nonzero integer.
unsigned two_adic_valuation(Nat n);

Nat gcd(Nat a, Nat b);

struct Block {
  unsigned k;
  Nat i;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Splits n >= 1 as n = 2^k + i with 0 <= i < 2^k.
Block decompose_block(Nat n);

std::string to_string(Nat v);
std::string to_string(Int v);
Nat parse_nat(std::string_view text);
Int parse_int(std::string_view text);

inline bool is_power_of_two(Nat n) { return n != 0 && (n & (n - 1)) == 0; }

/// Narrowing that throws OverflowError instead of truncating.
std::uint64_t to_u64(Nat v);

}  // namespace tplab
