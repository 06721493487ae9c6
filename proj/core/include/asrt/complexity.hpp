#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asrt/bigint.hpp"
#include "asrt/factorization.hpp"

namespace asrt {

/// T(0), ..., T(limit) where T(0) = 1 and T(n) = sum over divisors r of n of
/// T(r - 1). T(n) counts composition vectors A with f(A) = n, equivalently
/// absolutely symmetric rooted trees with n edges.
///
/// Immutable once built; concurrent reads are safe.
class ComplexityTable {
 public:
  /// Adopts precomputed values (e.g. from a cache file). Requires at least
  /// one value and values[0] == 1; throws FormatError otherwise. The
  /// recurrence itself is not re-checked here, see verify_theorem2.
  static ComplexityTable from_values(std::vector<BigInt> values);

  std::uint64_t limit() const noexcept { return values_.size() - 1; }

  /// T(n); throws RangeError when n > limit().
  const BigInt& at(std::uint64_t n) const;
  const BigInt& operator[](std::uint64_t n) const noexcept { return values_[n]; }

  std::span<const BigInt> values() const noexcept { return values_; }

 private:
  friend ComplexityTable build_table(std::uint64_t, const DivisorSieve&);
  friend ComplexityTable extend_table(ComplexityTable, std::uint64_t, const DivisorSieve&);

  explicit ComplexityTable(std::vector<BigInt> values) : values_(std::move(values)) {}

  std::vector<BigInt> values_;
};

/// Builds T(0..limit) in ascending n. Throws UsageError if the sieve does
/// not cover limit.
ComplexityTable build_table(std::uint64_t limit, const DivisorSieve& sieve);

/// Resumes the recurrence from table.limit() + 1 up to new_limit. A table
/// already at or beyond new_limit is returned unchanged.
ComplexityTable extend_table(ComplexityTable table, std::uint64_t new_limit,
                             const DivisorSieve& sieve);

const BigInt& t_value(const ComplexityTable& table, std::uint64_t n);

/// T*(n) = T(n) - T(n-1), n >= 1.
BigInt t_star(const ComplexityTable& table, std::uint64_t n);

/// T*(n) as the alternating sum of T(n/d) over squarefree divisors d > 1
/// of n. Defined for n >= 2 only.
BigInt t_star_inclusion_exclusion(const ComplexityTable& table, const DivisorSieve& sieve,
                                  std::uint64_t n);

/// True iff T*(n) == 1.
bool is_prime_by_complexity(const ComplexityTable& table, std::uint64_t n);

/// Both sides of T(n) < 1 + T(n-1) + (2*isqrt(n) - 2) * T(n/spf(n) - 1).
struct CompositeBound {
  std::uint64_t n = 0;
  std::uint64_t smallest_prime = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// Throws DomainError unless n is composite.
CompositeBound evaluate_composite_bound(const ComplexityTable& table, const DivisorSieve& sieve,
                                        std::uint64_t n);
bool check_composite_bound(const ComplexityTable& table, const DivisorSieve& sieve,
                           std::uint64_t n);

/// C(n, floor(n/2)), exact.
BigInt central_binomial(std::uint64_t n);

/// T(n) <= C(n, floor(n/2)) for n >= 1.
///
/// When (n + 1) * T(n) <= 2^n the bound follows without forming the
/// binomial, because C(n, floor(n/2)) is the largest of the n + 1
/// coefficients summing to 2^n. Otherwise the binomial is computed.
bool check_binomial_bound(const ComplexityTable& table, std::uint64_t n);

/// T(p^r) == sum_{k=0..r} T(p^k - 1). Throws DomainError if p is not prime
/// or r == 0, RangeError if p^r exceeds the table.
bool prime_power_identity(const ComplexityTable& table, const DivisorSieve& sieve,
                          std::uint64_t p, unsigned r);

/// T(0) = 1, T(n) = 1 + star[0] + ... + star[n-1].
std::vector<BigInt> t_from_star_prefix(std::span<const BigInt> star_values);

}  // namespace asrt
