#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

enum class TreeMode { stems_only, full };

std::string_view to_string(TreeMode m);

struct TreeVertex {
  Group group;
  unsigned level = 0;
  std::optional<std::size_t> parent;
  bool on_stem = false;
  unsigned depth = 0;   // distance from the stems
  unsigned height = 0;  // level of the last stem vertex on the path to the root
  unsigned rank = 0;
  std::optional<std::string> orbit_label;
};

/// Vertices are exact up to max_level; nothing is claimed beyond it.
struct GkTree {
  Group root;
  std::vector<TreeVertex> vertices;  // vertex 0 is the root; grouped by level
  TreeMode mode = TreeMode::full;
  unsigned max_level = 0;

  std::vector<std::size_t> level_sizes() const;
  unsigned max_rank() const;
};

/// Errors root-is-gk-type, order-cap. The trivial root needs `p`.
GkTree build_tree(const Group& root, unsigned max_level, TreeMode mode, const Limits& limits = {},
                  unsigned p = 0);

/// Directed graph with edges child -> parent; filled nodes have the maximum
/// rank occurring in the tree.
std::string to_dot(const GkTree& tree);

/// One representative per isomorphism class for each order p^k <= max_order.
struct Catalog {
  unsigned prime = 0;
  std::vector<std::vector<Group>> layers;  // layers[k] holds the groups of order p^k
};

Catalog enumerate_pgroups(unsigned p, std::size_t max_order, const Limits& limits = {});

/// All groups of each order up to max_order, built as prime-degree cyclic
/// extensions of the smaller layers. Complete for solvable groups, hence
/// for every order below 60. layers[n] holds the groups of order n.
std::vector<std::vector<Group>> enumerate_small_groups(std::size_t max_order, const Limits& limits = {});

struct Order16Classification {
  std::vector<std::size_t> gk;          // indices into the order-16 layer
  std::vector<std::size_t> roots;       // not GK, root of a tree with more than one vertex
  std::vector<std::size_t> neither;
};

/// Error incomplete-catalog unless the catalog has the 14 groups of order 16.
Order16Classification classify_order16(const Catalog& catalog, const Limits& limits = {});

}  // namespace pgk
