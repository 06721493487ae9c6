#include "asrt/complexity.hpp"

#include <string>

#include "asrt/errors.hpp"

namespace asrt {

namespace {

void require_in_table(const ComplexityTable& table, std::uint64_t n, const char* what) {
  if (n > table.limit()) {
    throw RangeError(std::string(what) + ": n=" + std::to_string(n) +
                     " exceeds table limit " + std::to_string(table.limit()));
  }
}

void append_terms(std::vector<BigInt>& values, std::uint64_t new_limit,
                  const DivisorSieve& sieve) {
  if (new_limit >= 2 && sieve.limit() < new_limit) {
    throw UsageError("sieve limit " + std::to_string(sieve.limit()) +
                     " is below requested table limit " + std::to_string(new_limit));
  }
  values.reserve(new_limit + 1);
  for (std::uint64_t n = values.size(); n <= new_limit; ++n) {
    BigInt sum = 0;
    sieve.for_each_divisor(n, [&](std::uint64_t r) { sum += values[r - 1]; });
    values.push_back(std::move(sum));
  }
}

}  // namespace

ComplexityTable ComplexityTable::from_values(std::vector<BigInt> values) {
  if (values.empty()) throw FormatError("complexity table needs at least T(0)");
  if (values.front() != 1) throw FormatError("complexity table must start with T(0) = 1");
  return ComplexityTable(std::move(values));
}

const BigInt& ComplexityTable::at(std::uint64_t n) const {
  require_in_table(*this, n, "T");
  return values_[n];
}

ComplexityTable build_table(std::uint64_t limit, const DivisorSieve& sieve) {
  std::vector<BigInt> values{1};
  append_terms(values, limit, sieve);
  return ComplexityTable(std::move(values));
}

ComplexityTable extend_table(ComplexityTable table, std::uint64_t new_limit,
                             const DivisorSieve& sieve) {
  append_terms(table.values_, new_limit, sieve);
  return table;
}

const BigInt& t_value(const ComplexityTable& table, std::uint64_t n) { return table.at(n); }

BigInt t_star(const ComplexityTable& table, std::uint64_t n) {
  if (n == 0) throw DomainError("T*(n) is defined for n >= 1");
  require_in_table(table, n, "T*");
  return table[n] - table[n - 1];
}

BigInt t_star_inclusion_exclusion(const ComplexityTable& table, const DivisorSieve& sieve,
                                  std::uint64_t n) {
  if (n < 2) throw DomainError("inclusion-exclusion form of T*(n) needs n >= 2");
  require_in_table(table, n, "T* (inclusion-exclusion)");
  BigInt sum = 0;
  for (const auto& [d, sign] : sieve.squarefree_divisor_terms(n)) {
    if (sign > 0) {
      sum += table[n / d];
    } else {
      sum -= table[n / d];
    }
  }
  return sum;
}

bool is_prime_by_complexity(const ComplexityTable& table, std::uint64_t n) {
  if (n < 2) throw DomainError("primality is defined for n >= 2");
  return t_star(table, n) == 1;
}

CompositeBound evaluate_composite_bound(const ComplexityTable& table, const DivisorSieve& sieve,
                                        std::uint64_t n) {
  if (n < 4 || sieve.is_prime(n)) {
    throw DomainError("composite bound applies to composite n only, got " + std::to_string(n));
  }
  require_in_table(table, n, "composite bound");
  CompositeBound out;
  out.n = n;
  out.smallest_prime = sieve.spf(n);
  out.lhs = table[n];
  out.rhs = 1 + table[n - 1] +
            BigInt(2 * isqrt(n) - 2) * table[n / out.smallest_prime - 1];
  out.holds = out.lhs < out.rhs;
  return out;
}

bool check_composite_bound(const ComplexityTable& table, const DivisorSieve& sieve,
                           std::uint64_t n) {
  return evaluate_composite_bound(table, sieve, n).holds;
}

BigInt central_binomial(std::uint64_t n) {
  const std::uint64_t k = n / 2;
  BigInt c = 1;
  // c = C(n - k + i, i) after step i; each division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

bool check_binomial_bound(const ComplexityTable& table, std::uint64_t n) {
  if (n == 0) throw DomainError("binomial bound is stated for n >= 1");
  const BigInt& t = table.at(n);
  if (BigInt(n + 1) * t <= (BigInt(1) << n)) return true;
  return t <= central_binomial(n);
}

bool prime_power_identity(const ComplexityTable& table, const DivisorSieve& sieve,
                          std::uint64_t p, unsigned r) {
  if (r == 0) throw DomainError("prime power exponent must be >= 1");
  if (p > table.limit()) {
    throw RangeError("prime " + std::to_string(p) + " exceeds table limit");
  }
  if (!sieve.is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> powers{1};
  for (unsigned k = 1; k <= r; ++k) {
    if (powers.back() > table.limit() / p) {
      throw RangeError("p^r exceeds table limit " + std::to_string(table.limit()));
    }
    powers.push_back(powers.back() * p);
  }
  BigInt sum = 0;
  for (const std::uint64_t pk : powers) sum += table[pk - 1];
  return table[powers.back()] == sum;
}

std::vector<BigInt> t_from_star_prefix(std::span<const BigInt> star_values) {
  std::vector<BigInt> out;
  out.reserve(star_values.size() + 1);
  out.emplace_back(1);
  for (const BigInt& s : star_values) out.push_back(out.back() + s);
  return out;
}

}  // namespace asrt
