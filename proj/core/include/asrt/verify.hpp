#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asrt/complexity.hpp"
#include "asrt/factorization.hpp"

namespace asrt {

struct ClaimResult {
  std::string id;
  std::string description;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_counterexample;
  std::string detail;  // what went wrong at the first counterexample
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return failures == 0; }
};

struct VerificationReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<ClaimResult> claims;

  bool all_passed() const noexcept;
  const ClaimResult* find(std::string_view id) const noexcept;

  /// Concatenates claims; the range becomes the hull of both ranges.
  void merge(VerificationReport other);
};

/// Plain-text rendering: one "PASS"/"FAIL" line per claim, timing on
/// separate lines starting with '#'.
std::string render_text(const VerificationReport& report);

/// Independent primality oracle. Throws DomainError for n < 2.
bool trial_division_is_prime(std::uint64_t n);

/// Enumeration checks for 1..n_max: vector count vs T(n), tree census with
/// distinct level sequences, vector/tree round trip, trailing 1 for prime n,
/// f vs nested sum on every enumerated vector.
VerificationReport verify_theorem1(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve);

/// Divisor sum recomputation and the T(n-1) + proper-divisor split, 1..n_max.
VerificationReport verify_theorem2(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve);

/// For 2..n_max: T* by difference vs inclusion-exclusion, and T* == 1 vs
/// trial division.
VerificationReport verify_theorem3(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve);

/// Prime-power identity, composite bound and binomial bound up to n_max.
/// Counterexamples are recorded, never thrown.
VerificationReport verify_bounds(std::uint64_t n_max, const ComplexityTable& table,
                                 const DivisorSieve& sieve);

}  // namespace asrt
