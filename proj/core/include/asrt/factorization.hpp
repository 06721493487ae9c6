#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace asrt {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod primes[i].prime ^ primes[i].exponent, primes strictly ascending.
struct Factorization {
  std::uint64_t n = 0;
  std::vector<PrimePower> primes;
};

/// One inclusion-exclusion term: d is the product of a nonempty set S of
/// distinct primes of n, sign = (-1)^(|S|-1).
struct SignedDivisor {
  std::uint64_t d = 0;
  int sign = 0;

  friend bool operator==(const SignedDivisor&, const SignedDivisor&) = default;
};

/// Smallest-prime-factor table for 2..limit.
///
/// Memory model: one 32-bit word per entry, so limit is capped at 2^32 - 1
/// and a sieve for 10^7 costs about 40 MB. Construction is a linear sieve;
/// afterwards the object is immutable and safe for concurrent reads.
class DivisorSieve {
 public:
  static constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

  /// Throws UsageError when limit < 2 or limit > kMaxLimit.
  explicit DivisorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of m, 2 <= m <= limit. Throws RangeError otherwise.
  std::uint64_t spf(std::uint64_t m) const;

  bool is_prime(std::uint64_t m) const;

  Factorization factorize(std::uint64_t n) const;

  /// All divisors of n in ascending order; n == 1 gives {1}.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

  /// Calls visit(d) once per divisor of n, in no particular order.
  /// Allocation-free apart from the small exponent stack.
  void for_each_divisor(std::uint64_t n,
                        const std::function<void(std::uint64_t)>& visit) const;

  /// 2^m - 1 terms, ascending by d.
  std::vector<SignedDivisor> squarefree_divisor_terms(std::uint64_t n) const;

  /// Primes <= limit, ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  void check_range(std::uint64_t n, std::uint64_t lo, const char* what) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Free-function spellings of the sieve operations.
inline DivisorSieve build_sieve(std::uint64_t limit) { return DivisorSieve(limit); }
inline Factorization factorize(const DivisorSieve& sieve, std::uint64_t n) {
  return sieve.factorize(n);
}
inline std::vector<std::uint64_t> divisors(const DivisorSieve& sieve, std::uint64_t n) {
  return sieve.divisors(n);
}
inline std::vector<SignedDivisor> squarefree_divisor_terms(const DivisorSieve& sieve,
                                                           std::uint64_t n) {
  return sieve.squarefree_divisor_terms(n);
}

/// Floor of sqrt(n) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace asrt
