#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asrt/bigint.hpp"
#include "asrt/factorization.hpp"
#include "asrt/vectors.hpp"

namespace asrt {

/// An absolutely symmetric rooted tree, stored as its level-multiplicity
/// sequence (m_1, ..., m_d): every node at depth i-1 has exactly m_i
/// children, and all siblings carry identical subtrees.
class AsrtTree {
 public:
  /// Throws DomainError on an empty sequence or a zero multiplicity.
  explicit AsrtTree(std::vector<std::uint64_t> levels);
  AsrtTree(std::initializer_list<std::uint64_t> levels)
      : AsrtTree(std::vector<std::uint64_t>(levels)) {}

  std::span<const std::uint64_t> levels() const noexcept { return levels_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  friend bool operator==(const AsrtTree&, const AsrtTree&) = default;
  friend auto operator<=>(const AsrtTree&, const AsrtTree&) = default;

 private:
  std::vector<std::uint64_t> levels_;
};

/// Ordered (planar) rooted tree. An empty child list is a leaf.
struct RootedTree {
  std::vector<RootedTree> children;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

RootedTree leaf();
RootedTree node(std::vector<RootedTree> children);
RootedTree path(std::size_t edges);
RootedTree star(std::size_t edges);

std::size_t node_count(const RootedTree& t);
inline std::size_t edge_count(const RootedTree& t) { return node_count(t) - 1; }

/// Levels are the components of A in reverse: a_k is the root's child count.
AsrtTree vector_to_tree(const CompositionVector& a);
CompositionVector tree_to_vector(const AsrtTree& t);

/// m_1 + m_1 m_2 + ... + m_1 m_2 ... m_d.
BigInt edge_count(const AsrtTree& t);

/// Trees with n edges, in the order of enumerate_vectors.
std::vector<AsrtTree> enumerate_trees(std::uint64_t n, const DivisorSieve& sieve,
                                      std::optional<std::size_t> max_items = {});

/// Default node cap for expand() and the encoders built on it.
inline constexpr std::size_t kDefaultExpandCapacity = 10'000;

/// Explicit planar tree with edge_count(t) + 1 nodes. Throws CapacityError
/// when that exceeds max_nodes.
RootedTree expand(const AsrtTree& t, std::size_t max_nodes = kDefaultExpandCapacity);

/// AHU encoding: a leaf is "()", an internal node is "(" followed by its
/// children's encodings sorted ascending as strings, then ")". Equal
/// strings iff isomorphic rooted trees.
std::string canonical_form(const RootedTree& t);

/// True iff at every node all child subtrees have the same canonical form.
/// Throws DomainError for a single-node tree.
bool is_asrt(const RootedTree& t);

/// Level sequence of a tree accepted by is_asrt; nullopt otherwise.
std::optional<AsrtTree> recover_levels(const RootedTree& t);

std::string to_paren(const AsrtTree& t, std::size_t max_nodes = kDefaultExpandCapacity);

/// "digraph <name> {", one "v<i> -> v<j>;" line per edge with nodes
/// numbered breadth-first from the root v0, then "}". Newline-terminated.
std::string to_dot(const AsrtTree& t, std::string_view name,
                   std::size_t max_nodes = kDefaultExpandCapacity);

/// "m1:m2:...:md".
std::string to_levels_string(const AsrtTree& t);

}  // namespace asrt
