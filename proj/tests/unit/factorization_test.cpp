#include <gtest/gtest.h>

#include "asrt/errors.hpp"
#include "asrt/factorization.hpp"
#include "support/oracles.hpp"

namespace asrt {
namespace {

using Terms = std::vector<SignedDivisor>;

TEST(DivisorSieve, SmallestPrimeFactorExamples) {
  const DivisorSieve s = build_sieve(12);
  EXPECT_EQ(s.spf(12), 2u);
  EXPECT_EQ(s.spf(9), 3u);
  EXPECT_EQ(s.spf(11), 11u);
  EXPECT_EQ(build_sieve(2).spf(2), 2u);
}

TEST(DivisorSieve, LargePrimeAtOneMillion) {
  const DivisorSieve s = build_sieve(1'000'000);
  ASSERT_TRUE(testing::trial_prime(999983));
  EXPECT_EQ(s.spf(999983), 999983u);
  EXPECT_EQ(s.primes().size(), 78498u);
}

TEST(DivisorSieve, InvariantsAgainstTrialDivision) {
  const DivisorSieve s = build_sieve(5000);
  for (std::uint64_t m = 2; m <= 5000; ++m) {
    const std::uint64_t p = s.spf(m);
    ASSERT_TRUE(testing::trial_prime(p)) << m;
    ASSERT_EQ(m % p, 0u) << m;
    for (std::uint64_t q = 2; q < p; ++q) ASSERT_NE(m % q, 0u) << m;
    ASSERT_EQ(p == m, testing::trial_prime(m)) << m;
  }
}

TEST(DivisorSieve, RejectsBadLimits) {
  EXPECT_THROW(DivisorSieve(0), UsageError);
  EXPECT_THROW(DivisorSieve(1), UsageError);
  EXPECT_THROW(DivisorSieve(DivisorSieve::kMaxLimit + 1), UsageError);
}

TEST(Factorize, Examples) {
  const DivisorSieve s(100);
  EXPECT_EQ(factorize(s, 12).primes, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(s, 7).primes, (std::vector<PrimePower>{{7, 1}}));
  EXPECT_EQ(factorize(s, 30).primes, (std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}}));
}

TEST(Factorize, RangeErrors) {
  const DivisorSieve s(100);
  EXPECT_THROW(factorize(s, 1), RangeError);
  EXPECT_THROW(factorize(s, 0), RangeError);
  EXPECT_THROW(factorize(s, 101), RangeError);
  EXPECT_THROW(s.spf(101), RangeError);
}

TEST(Factorize, ProductReproducesN) {
  const DivisorSieve s(20000);
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const Factorization f = s.factorize(n);
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < f.primes.size(); ++i) {
      if (i > 0) ASSERT_LT(f.primes[i - 1].prime, f.primes[i].prime);
      ASSERT_TRUE(s.is_prime(f.primes[i].prime));
      for (unsigned k = 0; k < f.primes[i].exponent; ++k) product *= f.primes[i].prime;
    }
    ASSERT_EQ(product, n);
  }
}

TEST(Divisors, Examples) {
  const DivisorSieve s(100);
  EXPECT_EQ(divisors(s, 12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(s, 1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(s, 13), (std::vector<std::uint64_t>{1, 13}));
  EXPECT_THROW(divisors(s, 0), RangeError);
  EXPECT_THROW(divisors(s, 101), RangeError);
}

TEST(Divisors, MatchScanAndCountFormula) {
  const DivisorSieve s(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::vector<std::uint64_t> scanned;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) scanned.push_back(d);
    }
    ASSERT_EQ(s.divisors(n), scanned) << n;

    std::vector<std::uint64_t> visited;
    s.for_each_divisor(n, [&](std::uint64_t d) { visited.push_back(d); });
    std::sort(visited.begin(), visited.end());
    ASSERT_EQ(visited, scanned) << n;

    if (n >= 2) {
      std::size_t expected = 1;
      for (const auto& pp : s.factorize(n).primes) expected *= pp.exponent + 1;
      ASSERT_EQ(scanned.size(), expected) << n;
    }
  }
}

TEST(SquarefreeDivisorTerms, Examples) {
  const DivisorSieve s(100);
  EXPECT_EQ(squarefree_divisor_terms(s, 12), (Terms{{2, 1}, {3, 1}, {6, -1}}));
  EXPECT_EQ(squarefree_divisor_terms(s, 7), (Terms{{7, 1}}));
  EXPECT_EQ(squarefree_divisor_terms(s, 30),
            (Terms{{2, 1}, {3, 1}, {5, 1}, {6, -1}, {10, -1}, {15, -1}, {30, 1}}));
  EXPECT_THROW(squarefree_divisor_terms(s, 1), RangeError);
}

TEST(SquarefreeDivisorTerms, SignsSumToOneAndCountIsTwoToTheM) {
  const DivisorSieve s(1000);
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const Terms terms = s.squarefree_divisor_terms(n);
    int signs = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      signs += terms[i].sign;
      ASSERT_EQ(n % terms[i].d, 0u);
      if (i > 0) ASSERT_LT(terms[i - 1].d, terms[i].d);
    }
    ASSERT_EQ(signs, 1) << n;
    const std::size_t m = s.factorize(n).primes.size();
    ASSERT_EQ(terms.size(), (std::size_t{1} << m) - 1) << n;
  }
}

TEST(Isqrt, MatchesDefinition) {
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    const std::uint64_t r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(0xFFFFFFFFFFFFFFFFull), 0xFFFFFFFFull);
  EXPECT_EQ(isqrt(999999999999999999ull), 999999999ull);
}

}  // namespace
}  // namespace asrt
