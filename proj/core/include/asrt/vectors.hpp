#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "asrt/bigint.hpp"
#include "asrt/factorization.hpp"

namespace asrt {

/// (a_1, ..., a_k), k >= 1, every a_i >= 1.
class CompositionVector {
 public:
  /// Throws DomainError on an empty list or a zero component.
  explicit CompositionVector(std::vector<std::uint64_t> components);
  CompositionVector(std::initializer_list<std::uint64_t> components)
      : CompositionVector(std::vector<std::uint64_t>(components)) {}

  std::span<const std::uint64_t> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  std::uint64_t back() const noexcept { return components_.back(); }

  friend bool operator==(const CompositionVector&, const CompositionVector&) = default;
  friend auto operator<=>(const CompositionVector&, const CompositionVector&) = default;

 private:
  std::vector<std::uint64_t> components_;
};

/// f(a_1) = a_1, f(a_1..a_{i+1}) = (f(a_1..a_i) + 1) * a_{i+1}.
BigInt eval_f(const CompositionVector& a);

/// a_1 a_2 ... a_k + a_2 ... a_k + ... + a_k.
BigInt expand_nested_sum(const CompositionVector& a);

namespace detail {

/// reachable[v] is true iff some sequence of further components takes the
/// running value v to exactly n, i.e. v == n or v == n/d - 1 for a divisor
/// d <= n/2 of n with n/d - 1 itself reachable.
std::vector<bool> values_reaching(std::uint64_t n, const DivisorSieve& sieve);

}  // namespace detail

/// Streams every vector A with f(A) = n to visit(span) in strict
/// lexicographic order. visit returns false to stop early. The span is only
/// valid during the call. Throws RangeError unless 1 <= n <= sieve.limit().
template <typename Visitor>
void for_each_vector(std::uint64_t n, const DivisorSieve& sieve, Visitor&& visit) {
  const std::vector<bool> reachable = detail::values_reaching(n, sieve);
  // Iterative DFS; the all-ones vector is n components deep. A virtual
  // running value of 0 before the first component makes (v + 1) * a uniform.
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> running{0};
  std::uint64_t candidate = 1;
  while (true) {
    const std::uint64_t step = running.back() + 1;
    std::uint64_t a = candidate;
    while (step * a <= n && !reachable[step * a]) ++a;
    if (step * a <= n) {
      prefix.push_back(a);
      running.push_back(step * a);
      if (running.back() != n) {
        candidate = 1;
        continue;
      }
      if (!visit(std::span<const std::uint64_t>(prefix))) return;
    }
    if (prefix.empty()) return;
    candidate = prefix.back() + 1;
    prefix.pop_back();
    running.pop_back();
  }
}

/// All vectors with f(A) = n, lexicographically sorted. With max_items set,
/// throws CapacityError as soon as the result would exceed it.
std::vector<CompositionVector> enumerate_vectors(std::uint64_t n, const DivisorSieve& sieve,
                                                 std::optional<std::size_t> max_items = {});

/// Number of vectors with f(A) = n, counted one by one through
/// for_each_vector. Never reads a ComplexityTable, so it serves as an
/// independent check of the divisor recurrence.
BigInt count_vectors(std::uint64_t n, const DivisorSieve& sieve);

}  // namespace asrt
