#include "asrt/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "asrt/errors.hpp"
#include "asrt/trees.hpp"
#include "asrt/vectors.hpp"

namespace asrt {

namespace {

using Clock = std::chrono::steady_clock;

void require_coverage(std::uint64_t n_max, const ComplexityTable& table,
                      const DivisorSieve& sieve) {
  if (n_max > table.limit() || (n_max >= 2 && n_max > sieve.limit())) {
    throw RangeError("verification range " + std::to_string(n_max) +
                     " exceeds table limit " + std::to_string(table.limit()) +
                     " or sieve limit " + std::to_string(sieve.limit()));
  }
}

// Accumulates one claim while it runs.
class ClaimTracker {
 public:
  ClaimTracker(std::string id, std::string description, std::uint64_t lo, std::uint64_t hi)
      : start_(Clock::now()) {
    result_.id = std::move(id);
    result_.description = std::move(description);
    result_.lo = lo;
    result_.hi = hi;
  }

  void record(std::uint64_t n, bool ok, const std::string& detail = {}) {
    ++result_.checked;
    if (ok) return;
    ++result_.failures;
    if (!result_.first_counterexample) {
      result_.first_counterexample = n;
      result_.detail = detail;
    }
  }

  template <typename DetailFn>
  void record_lazy(std::uint64_t n, bool ok, DetailFn detail) {
    if (ok) {
      record(n, true);
    } else {
      record(n, false, detail());
    }
  }

  ClaimResult finish() {
    result_.elapsed = Clock::now() - start_;
    return std::move(result_);
  }

 private:
  ClaimResult result_;
  Clock::time_point start_;
};

std::string mismatch(const BigInt& got, const BigInt& want) {
  return got.str() + " != " + want.str();
}

}  // namespace

bool VerificationReport::all_passed() const noexcept {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.passed(); });
}

const ClaimResult* VerificationReport::find(std::string_view id) const noexcept {
  for (const ClaimResult& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(VerificationReport other) {
  if (claims.empty()) {
    lo = other.lo;
    hi = other.hi;
  } else if (!other.claims.empty()) {
    lo = std::min(lo, other.lo);
    hi = std::max(hi, other.hi);
  }
  for (ClaimResult& c : other.claims) claims.push_back(std::move(c));
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification report [" << report.lo << ", " << report.hi << "]\n";
  for (const ClaimResult& c : report.claims) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.id << " [" << c.lo << ", " << c.hi
        << "] checked=" << c.checked;
    if (!c.passed()) {
      out << " failures=" << c.failures << " first_counterexample=" << *c.first_counterexample;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
    }
    out << "  " << c.description << "\n";
    out << "# " << c.id << " elapsed_ms="
        << std::chrono::duration_cast<std::chrono::milliseconds>(c.elapsed).count() << "\n";
  }
  out << (report.all_passed() ? "ALL PASS\n" : "SOME CLAIMS FAILED\n");
  return out.str();
}

bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) throw DomainError("primality is defined for n >= 2");
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  const std::uint64_t root = isqrt(n);
  for (std::uint64_t d = 3; d <= root; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

VerificationReport verify_theorem1(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve) {
  require_coverage(n_max, table, sieve);
  VerificationReport report{1, n_max, {}};

  ClaimTracker count("theorem1.count_vectors", "count_vectors(n) == T(n)", 1, n_max);
  ClaimTracker census("theorem1.tree_census",
                      "enumerate_trees(n) has T(n) pairwise distinct trees", 1, n_max);
  ClaimTracker round_trip("theorem1.round_trip",
                          "tree_to_vector(vector_to_tree(A)) == A and edge count == f(A)", 1,
                          n_max);
  ClaimTracker trailing_one("theorem1.prime_trailing_one",
                            "prime n: every vector of length > 1 ends in 1", 2, n_max);
  ClaimTracker nested_sum("theorem1.nested_sum", "f(A) == a1..ak + a2..ak + ... + ak", 1,
                          n_max);

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BigInt counted = count_vectors(n, sieve);
    count.record_lazy(n, counted == table[n], [&] { return mismatch(counted, table[n]); });

    std::uint64_t trees = 0;
    bool trips = true;
    bool sums = true;
    bool ends_in_one = true;
    std::set<AsrtTree> distinct;
    const bool prime = n >= 2 && sieve.is_prime(n);
    for_each_vector(n, sieve, [&](std::span<const std::uint64_t> c) {
      const CompositionVector a(std::vector<std::uint64_t>(c.begin(), c.end()));
      const AsrtTree t = vector_to_tree(a);
      ++trees;
      distinct.insert(t);
      const BigInt f = eval_f(a);
      trips = trips && tree_to_vector(t) == a && edge_count(t) == f;
      sums = sums && f == expand_nested_sum(a) && f == n;
      if (prime && a.size() > 1) ends_in_one = ends_in_one && a.back() == 1;
      return true;
    });
    census.record_lazy(n, BigInt(trees) == table[n] && distinct.size() == trees, [&] {
      return std::to_string(trees) + " trees, " + std::to_string(distinct.size()) +
             " distinct, T(n)=" + table[n].str();
    });
    round_trip.record(n, trips);
    nested_sum.record(n, sums);
    if (n >= 2) trailing_one.record(n, ends_in_one);
  }

  for (ClaimTracker* t : {&count, &census, &round_trip, &trailing_one, &nested_sum}) {
    report.claims.push_back(t->finish());
  }
  return report;
}

VerificationReport verify_theorem2(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve) {
  require_coverage(n_max, table, sieve);
  VerificationReport report{1, n_max, {}};

  ClaimTracker base("theorem2.base", "T(0) == 1", 0, 0);
  base.record(0, table[0] == 1);

  ClaimTracker recurrence("theorem2.divisor_sum", "T(n) == sum_{r|n} T(r-1)", 1, n_max);
  ClaimTracker split("theorem2.two_kinds", "T(n) == T(n-1) + sum_{r|n, r<n} T(r-1)", 1, n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt proper = 0;
    for (const std::uint64_t r : sieve.divisors(n)) {
      if (r < n) proper += table[r - 1];
    }
    const BigInt full = proper + table[n - 1];
    recurrence.record_lazy(n, full == table[n], [&] { return mismatch(full, table[n]); });
    split.record(n, table[n] - table[n - 1] == proper);
  }

  for (ClaimTracker* t : {&base, &recurrence, &split}) report.claims.push_back(t->finish());
  return report;
}

VerificationReport verify_theorem3(std::uint64_t n_max, const ComplexityTable& table,
                                   const DivisorSieve& sieve) {
  require_coverage(n_max, table, sieve);
  VerificationReport report{2, n_max, {}};

  ClaimTracker ie("theorem3.inclusion_exclusion",
                  "T*(n) == alternating sum of T(n/d) over squarefree d > 1", 2, n_max);
  ClaimTracker primality("theorem3.prime_iff_star_one", "T*(n) == 1 iff trial division says prime",
                         2, n_max);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const BigInt diff = t_star(table, n);
    const BigInt formula = t_star_inclusion_exclusion(table, sieve, n);
    ie.record_lazy(n, diff == formula, [&] { return mismatch(diff, formula); });
    primality.record(n, (diff == 1) == trial_division_is_prime(n));
  }

  report.claims.push_back(ie.finish());
  report.claims.push_back(primality.finish());
  return report;
}

VerificationReport verify_bounds(std::uint64_t n_max, const ComplexityTable& table,
                                 const DivisorSieve& sieve) {
  require_coverage(n_max, table, sieve);
  VerificationReport report{1, n_max, {}};

  ClaimTracker powers("bounds.prime_power", "T(p^r) == sum_{k=0..r} T(p^k - 1)", 2, n_max);
  if (n_max >= 2) {
    for (const std::uint32_t p : sieve.primes()) {
      if (p > n_max) break;
      std::uint64_t pr = p;
      for (unsigned r = 1;; ++r) {
        powers.record(pr, prime_power_identity(table, sieve, p, r));
        if (pr > n_max / p) break;
        pr *= p;
      }
    }
  }

  ClaimTracker composite("bounds.composite",
                         "T(n) < 1 + T(n-1) + (2 isqrt(n) - 2) T(n/spf(n) - 1), n composite",
                         4, n_max);
  for (std::uint64_t n = 4; n <= n_max; ++n) {
    if (sieve.is_prime(n)) continue;
    const CompositeBound b = evaluate_composite_bound(table, sieve, n);
    composite.record_lazy(n, b.holds, [&] { return b.lhs.str() + " >= " + b.rhs.str(); });
  }

  ClaimTracker binomial("bounds.binomial", "T(n) <= C(n, floor(n/2))", 1, n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) binomial.record(n, check_binomial_bound(table, n));

  for (ClaimTracker* t : {&powers, &composite, &binomial}) report.claims.push_back(t->finish());
  return report;
}

}  // namespace asrt
