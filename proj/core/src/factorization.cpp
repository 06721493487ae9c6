#include "asrt/factorization.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "asrt/errors.hpp"

namespace asrt {

DivisorSieve::DivisorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw UsageError("sieve limit must be at least 2, got " + std::to_string(limit));
  }
  if (limit > kMaxLimit) {
    throw UsageError("sieve limit " + std::to_string(limit) + " exceeds 32-bit entries");
  }
  // Linear sieve: every composite m is struck exactly once, by spf(m).
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t smallest = spf_[i];
    for (const std::uint32_t p : primes_) {
      if (p > smallest) break;
      const std::uint64_t m = i * p;
      if (m > limit) break;
      spf_[m] = p;
    }
  }
}

void DivisorSieve::check_range(std::uint64_t n, std::uint64_t lo, const char* what) const {
  if (n < lo || n > limit_) {
    throw RangeError(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(limit_) + "]");
  }
}

std::uint64_t DivisorSieve::spf(std::uint64_t m) const {
  check_range(m, 2, "spf");
  return spf_[m];
}

bool DivisorSieve::is_prime(std::uint64_t m) const {
  if (m < 2) return false;
  check_range(m, 2, "is_prime");
  return spf_[m] == m;
}

Factorization DivisorSieve::factorize(std::uint64_t n) const {
  check_range(n, 2, "factorize");
  Factorization out{n, {}};
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.primes.push_back({p, e});
  }
  return out;
}

void DivisorSieve::for_each_divisor(std::uint64_t n,
                                    const std::function<void(std::uint64_t)>& visit) const {
  check_range(n, 1, "divisors");
  if (n == 1) {
    visit(1);
    return;
  }
  // 2*3*5*...*29 already exceeds 2^32, so at most 9 distinct primes.
  std::array<std::uint64_t, 16> p{};
  std::array<unsigned, 16> e{};
  std::size_t m = 0;
  for (std::uint64_t rest = n; rest > 1; ++m) {
    p[m] = spf_[rest];
    while (rest % p[m] == 0) {
      rest /= p[m];
      ++e[m];
    }
  }
  // Odometer over exponent vectors.
  std::array<unsigned, 16> digit{};
  std::uint64_t d = 1;
  while (true) {
    visit(d);
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (digit[i] < e[i]) {
        ++digit[i];
        d *= p[i];
        break;
      }
      for (unsigned k = 0; k < digit[i]; ++k) d /= p[i];
      digit[i] = 0;
    }
    if (i == m) return;
  }
}

std::vector<std::uint64_t> DivisorSieve::divisors(std::uint64_t n) const {
  check_range(n, 1, "divisors");
  if (n == 1) return {1};
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.primes) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedDivisor> DivisorSieve::squarefree_divisor_terms(std::uint64_t n) const {
  const Factorization f = factorize(n);
  const std::size_t m = f.primes.size();
  std::vector<SignedDivisor> out;
  out.reserve((std::size_t{1} << m) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::uint64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= f.primes[i].prime;
        ++bits;
      }
    }
    out.push_back({d, bits % 2 == 1 ? 1 : -1});
  }
  std::sort(out.begin(), out.end(),
            [](const SignedDivisor& a, const SignedDivisor& b) { return a.d < b.d; });
  return out;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Newton from an overestimate decreases monotonically to floor(sqrt(n)).
  std::uint64_t x = n;
  std::uint64_t y = x / 2 + (x & 1);
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace asrt
