#include "asrt/vectors.hpp"

#include <string>

#include "asrt/errors.hpp"

namespace asrt {

CompositionVector::CompositionVector(std::vector<std::uint64_t> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("composition vector must be nonempty");
  for (const std::uint64_t a : components_) {
    if (a == 0) throw DomainError("composition vector components must be >= 1");
  }
}

BigInt eval_f(const CompositionVector& a) {
  const auto c = a.components();
  BigInt value = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) value = (value + 1) * c[i];
  return value;
}

BigInt expand_nested_sum(const CompositionVector& a) {
  const auto c = a.components();
  BigInt sum = 0;
  BigInt suffix_product = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    suffix_product *= c[i];
    sum += suffix_product;
  }
  return sum;
}

namespace detail {

std::vector<bool> values_reaching(std::uint64_t n, const DivisorSieve& sieve) {
  if (n < 1 || n > sieve.limit()) {
    throw RangeError("vector enumeration: n=" + std::to_string(n) + " outside [1, " +
                     std::to_string(sieve.limit()) + "]");
  }
  std::vector<bool> reachable(n + 1, false);
  std::vector<std::uint64_t> pending{n};
  reachable[n] = true;
  while (!pending.empty()) {
    const std::uint64_t m = pending.back();
    pending.pop_back();
    if (m < 2) continue;
    sieve.for_each_divisor(m, [&](std::uint64_t d) {
      if (d == m) return;
      const std::uint64_t prev = m / d - 1;
      if (prev >= 1 && !reachable[prev]) {
        reachable[prev] = true;
        pending.push_back(prev);
      }
    });
  }
  return reachable;
}

}  // namespace detail

std::vector<CompositionVector> enumerate_vectors(std::uint64_t n, const DivisorSieve& sieve,
                                                 std::optional<std::size_t> max_items) {
  std::vector<CompositionVector> out;
  for_each_vector(n, sieve, [&](std::span<const std::uint64_t> a) {
    if (max_items && out.size() >= *max_items) {
      throw CapacityError("more than " + std::to_string(*max_items) + " vectors for n=" +
                          std::to_string(n));
    }
    out.emplace_back(std::vector<std::uint64_t>(a.begin(), a.end()));
    return true;
  });
  return out;
}

BigInt count_vectors(std::uint64_t n, const DivisorSieve& sieve) {
  std::uint64_t count = 0;
  for_each_vector(n, sieve, [&](std::span<const std::uint64_t>) {
    ++count;
    return true;
  });
  return BigInt(count);
}

}  // namespace asrt
