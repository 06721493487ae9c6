#include "asrt/trees.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "asrt/errors.hpp"

namespace asrt {

AsrtTree::AsrtTree(std::vector<std::uint64_t> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw DomainError("a.s.r.t. needs at least one level");
  for (const std::uint64_t m : levels_) {
    if (m == 0) throw DomainError("a.s.r.t. level multiplicities must be >= 1");
  }
}

RootedTree leaf() { return {}; }

RootedTree node(std::vector<RootedTree> children) { return RootedTree{std::move(children)}; }

RootedTree path(std::size_t edges) {
  RootedTree t;
  for (std::size_t i = 0; i < edges; ++i) t = node({std::move(t)});
  return t;
}

RootedTree star(std::size_t edges) {
  return node(std::vector<RootedTree>(edges, leaf()));
}

std::size_t node_count(const RootedTree& t) {
  std::size_t count = 1;
  for (const RootedTree& c : t.children) count += node_count(c);
  return count;
}

AsrtTree vector_to_tree(const CompositionVector& a) {
  const auto c = a.components();
  return AsrtTree(std::vector<std::uint64_t>(c.rbegin(), c.rend()));
}

CompositionVector tree_to_vector(const AsrtTree& t) {
  const auto m = t.levels();
  return CompositionVector(std::vector<std::uint64_t>(m.rbegin(), m.rend()));
}

BigInt edge_count(const AsrtTree& t) {
  BigInt total = 0;
  BigInt width = 1;
  for (const std::uint64_t m : t.levels()) {
    width *= m;
    total += width;
  }
  return total;
}

std::vector<AsrtTree> enumerate_trees(std::uint64_t n, const DivisorSieve& sieve,
                                      std::optional<std::size_t> max_items) {
  std::vector<AsrtTree> out;
  for_each_vector(n, sieve, [&](std::span<const std::uint64_t> a) {
    if (max_items && out.size() >= *max_items) {
      throw CapacityError("more than " + std::to_string(*max_items) + " trees for n=" +
                          std::to_string(n));
    }
    out.emplace_back(std::vector<std::uint64_t>(a.rbegin(), a.rend()));
    return true;
  });
  return out;
}

namespace {

void require_capacity(const AsrtTree& t, std::size_t max_nodes) {
  const BigInt nodes = edge_count(t) + 1;
  if (nodes > max_nodes) {
    throw CapacityError("tree with " + nodes.str() + " nodes exceeds capacity of " +
                        std::to_string(max_nodes));
  }
}

// Canonical form of t, or nullopt if some node has non-identical children.
std::optional<std::string> symmetric_form(const RootedTree& t) {
  if (t.children.empty()) return "()";
  std::optional<std::string> first = symmetric_form(t.children.front());
  if (!first) return std::nullopt;
  for (std::size_t i = 1; i < t.children.size(); ++i) {
    const std::optional<std::string> other = symmetric_form(t.children[i]);
    if (!other || *other != *first) return std::nullopt;
  }
  std::string out;
  out.reserve(first->size() * t.children.size() + 2);
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) out += *first;
  out += ')';
  return out;
}

}  // namespace

RootedTree expand(const AsrtTree& t, std::size_t max_nodes) {
  require_capacity(t, max_nodes);
  const auto levels = t.levels();
  RootedTree subtree;  // the deepest level is all leaves
  for (std::size_t i = levels.size(); i-- > 0;) {
    subtree = node(std::vector<RootedTree>(levels[i], subtree));
  }
  return subtree;
}

std::string canonical_form(const RootedTree& t) {
  std::vector<std::string> parts;
  parts.reserve(t.children.size());
  for (const RootedTree& c : t.children) parts.push_back(canonical_form(c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) out += p;
  out += ')';
  return out;
}

bool is_asrt(const RootedTree& t) {
  if (t.children.empty()) throw DomainError("a.s.r.t. test needs a tree with at least one edge");
  return symmetric_form(t).has_value();
}

std::optional<AsrtTree> recover_levels(const RootedTree& t) {
  if (!is_asrt(t)) return std::nullopt;
  std::vector<std::uint64_t> levels;
  for (const RootedTree* cur = &t; !cur->children.empty(); cur = &cur->children.front()) {
    levels.push_back(cur->children.size());
  }
  return AsrtTree(std::move(levels));
}

std::string to_paren(const AsrtTree& t, std::size_t max_nodes) {
  return canonical_form(expand(t, max_nodes));
}

std::string to_dot(const AsrtTree& t, std::string_view name, std::size_t max_nodes) {
  const RootedTree tree = expand(t, max_nodes);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  std::deque<std::pair<const RootedTree*, std::size_t>> queue{{&tree, 0}};
  std::size_t next_id = 1;
  while (!queue.empty()) {
    const auto [cur, id] = queue.front();
    queue.pop_front();
    for (const RootedTree& child : cur->children) {
      out << 'v' << id << " -> v" << next_id << ";\n";
      queue.emplace_back(&child, next_id++);
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_levels_string(const AsrtTree& t) {
  std::string out;
  for (const std::uint64_t m : t.levels()) {
    if (!out.empty()) out += ':';
    out += std::to_string(m);
  }
  return out;
}

}  // namespace asrt
