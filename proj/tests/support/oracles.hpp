#pragma once

// Brute-force reference computations for tests. Nothing here goes through
// the sieve, the recurrence, or the pruned enumeration it is used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "asrt/bigint.hpp"
#include "asrt/trees.hpp"

namespace asrt::testing {

// T(0..n) from the recurrence with divisors found by scanning 1..m.
inline std::vector<BigInt> naive_complexity(std::uint64_t n) {
  std::vector<BigInt> t{1};
  for (std::uint64_t m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (std::uint64_t r = 1; r <= m; ++r) {
      if (m % r == 0) sum += t[r - 1];
    }
    t.push_back(sum);
  }
  return t;
}

// Every vector (a_1, ..., a_k) with f <= n is visited; those with f == n are
// reported. No divisor reasoning, no pruning beyond f exceeding n.
inline void brute_force_vectors(std::uint64_t n,
                                const std::function<void(const std::vector<std::uint64_t>&)>& emit) {
  std::vector<std::uint64_t> a;
  std::function<void(std::uint64_t)> grow = [&](std::uint64_t value) {
    if (value == n) emit(a);
    for (std::uint64_t next = 1; (value + 1) * next <= n; ++next) {
      a.push_back(next);
      grow((value + 1) * next);
      a.pop_back();
    }
  };
  for (std::uint64_t first = 1; first <= n; ++first) {
    a.assign(1, first);
    grow(first);
  }
}

inline std::uint64_t brute_force_count(std::uint64_t n) {
  std::uint64_t count = 0;
  brute_force_vectors(n, [&](const std::vector<std::uint64_t>&) { ++count; });
  return count;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// All trees obtained from t by hanging one new leaf under one node.
inline std::vector<RootedTree> add_one_leaf(const RootedTree& t) {
  std::vector<RootedTree> out;
  RootedTree at_root = t;
  at_root.children.push_back(leaf());
  out.push_back(std::move(at_root));
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    for (RootedTree& grown : add_one_leaf(t.children[i])) {
      RootedTree copy = t;
      copy.children[i] = std::move(grown);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

// One representative per isomorphism class of rooted trees with `edges`
// edges, keyed by canonical form.
inline std::map<std::string, RootedTree> all_rooted_trees(std::size_t edges) {
  std::map<std::string, RootedTree> level{{"()", leaf()}};
  for (std::size_t e = 1; e <= edges; ++e) {
    std::map<std::string, RootedTree> next;
    for (const auto& [form, tree] : level) {
      for (RootedTree& grown : add_one_leaf(tree)) {
        std::string key = canonical_form(grown);
        next.emplace(std::move(key), std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

// Number of unlabeled rooted trees with `nodes` nodes via the Euler
// transform recurrence a(n+1) = (1/n) sum_k (sum_{d|k} d a(d)) a(n-k+1).
inline std::vector<std::uint64_t> rooted_tree_counts(std::size_t nodes) {
  std::vector<std::uint64_t> a(nodes + 1, 0);
  if (nodes >= 1) a[1] = 1;
  for (std::size_t n = 1; n < nodes; ++n) {
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * a[d];
      }
      total += s * a[n - k + 1];
    }
    a[n + 1] = total / n;
  }
  return a;
}

}  // namespace asrt::testing
