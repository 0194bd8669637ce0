#include "pgk/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pgk/extensions.hpp"
#include "pgk/gk.hpp"
#include "pgk/search.hpp"
#include "pgk/stems.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

TreeVertex make_vertex(Group g, unsigned level, std::optional<std::size_t> parent) {
  TreeVertex v;
  v.group = std::move(g);
  v.level = level;
  v.parent = parent;
  return v;
}

bool on_stem(const Group& g) {
  return exponent(g) == exponent_of(g, center(g));
}

void annotate(GkTree& tree) {
  for (auto& v : tree.vertices) {
    v.rank = rank(v.group);
    v.on_stem = on_stem(v.group);
  }
  const bool infinite = !tree.vertices.empty() && tree.vertices[0].on_stem;
  for (auto& v : tree.vertices) {
    if (!infinite) {
      v.height = 0;
    } else if (v.on_stem) {
      v.height = v.level;
    } else {
      v.height = tree.vertices[*v.parent].height;
    }
    v.depth = v.level - v.height;
  }
}

std::string orbit_name(const Group& root, std::size_t index, const OrbitBlock& b) {
  return "O" + std::to_string(index) + "[" + root.label(b.representative) + "]";
}

}  // namespace

std::string_view to_string(TreeMode m) { return m == TreeMode::full ? "full" : "stems-only"; }

std::vector<std::size_t> GkTree::level_sizes() const {
  std::vector<std::size_t> out(max_level + 1, 0);
  for (const auto& v : vertices) ++out[v.level];
  return out;
}

unsigned GkTree::max_rank() const {
  unsigned r = 0;
  for (const auto& v : vertices) r = std::max(r, v.rank);
  return r;
}

GkTree build_tree(const Group& root, unsigned max_level, TreeMode mode, const Limits& limits,
                  unsigned p) {
  if (root.order() > 1 && is_gk_type(root)) {
    throw Error(ErrorCode::root_is_gk_type, "the root of a GK tree is not of GK type");
  }
  unsigned prime = p;
  if (root.order() > 1) prime = *root.prime();
  else if (prime == 0) prime = root.prime_hint().value_or(0);
  if (prime == 0) throw Error(ErrorCode::invalid_params, "prime required for the trivial root");
  const Group r = root.order() == 1 ? root.with_prime(prime) : root;
  if (root.order() * ipow(prime, max_level) > limits.order_cap) {
    throw Error(ErrorCode::order_cap, "tree vertices at the requested level exceed the order cap");
  }

  GkTree tree;
  tree.root = r;
  tree.mode = mode;
  tree.max_level = max_level;
  tree.vertices.push_back(make_vertex(r, 0, std::nullopt));

  const bool infinite = on_stem(r);
  std::optional<StemAnalysis> stems;
  if (infinite && r.order() > 1) stems = stem_analysis(r, limits);

  if (mode == TreeMode::stems_only) {
    if (infinite) {
      // for each level, one vertex per block of the level's partition
      std::vector<std::size_t> prev_ids{0};
      const OrbitPartition* prev_part = nullptr;
      OrbitPartition trivial_part;
      if (r.order() == 1) {
        trivial_part.blocks.push_back(OrbitBlock{{0}, 0, 0});
      }
      for (unsigned l = 1; l <= max_level; ++l) {
        const OrbitPartition& part =
            r.order() == 1 ? trivial_part : stems->partitions[std::min<unsigned>(l, stems->e) - 1];
        std::vector<std::size_t> ids;
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
          std::size_t parent = 0;
          if (prev_part) {
            for (std::size_t j = 0; j < prev_part->blocks.size(); ++j) {
              const auto& pm = prev_part->blocks[j].members;
              if (std::binary_search(pm.begin(), pm.end(), part.blocks[b].representative)) parent = prev_ids[j];
            }
          }
          TreeVertex v = make_vertex(stem_vertex(r, part.blocks[b], l, limits), l, parent);
          v.orbit_label = orbit_name(r, b, part.blocks[b]);
          ids.push_back(tree.vertices.size());
          tree.vertices.push_back(std::move(v));
        }
        prev_ids = std::move(ids);
        prev_part = &part;
      }
    }
    annotate(tree);
    return tree;
  }

  std::vector<std::size_t> frontier{0};
  for (unsigned l = 1; l <= max_level && !frontier.empty(); ++l) {
    std::vector<TreeVertex> layer;
    for (std::size_t parent : frontier) {
      const Group parent_group = tree.vertices[parent].group;
      ExtensionOptions opt;
      opt.gk_only = true;
      for (auto& ext : enumerate_p_extensions(parent_group, prime, limits, opt)) {
        layer.push_back(make_vertex(ext.group, l, parent));
      }
    }
    std::stable_sort(layer.begin(), layer.end(), [](const TreeVertex& a, const TreeVertex& b) {
      return a.group.fingerprint() < b.group.fingerprint();
    });
    frontier.clear();
    for (auto& v : layer) {
      frontier.push_back(tree.vertices.size());
      tree.vertices.push_back(std::move(v));
    }
  }
  annotate(tree);

  // label stem vertices by the orbit whose stem vertex they are isomorphic to
  if (stems) {
    for (auto& v : tree.vertices) {
      if (v.level == 0 || !v.on_stem) continue;
      const OrbitPartition& part = stems->partitions[std::min<unsigned>(v.level, stems->e) - 1];
      for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        if (is_isomorphic(v.group, stem_vertex(r, part.blocks[b], v.level, limits), limits)) {
          v.orbit_label = orbit_name(r, b, part.blocks[b]);
          break;
        }
      }
    }
  } else if (infinite) {
    for (auto& v : tree.vertices)
      if (v.level > 0 && v.on_stem) v.orbit_label = "O0[1]";
  }
  return tree;
}

std::string to_dot(const GkTree& tree) {
  std::ostringstream out;
  const unsigned top = tree.max_rank();
  out << "digraph gk_tree {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    const auto& v = tree.vertices[i];
    out << "  v" << i << " [label=\"" << v.group.order();
    if (v.orbit_label) out << "\\n" << *v.orbit_label;
    out << "\"";
    if (v.rank == top) out << ", style=filled";
    out << "];\n";
  }
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    const auto& v = tree.vertices[i];
    if (v.parent) out << "  v" << i << " -> v" << *v.parent << ";\n";
  }
  out << "}\n";
  return out.str();
}

Catalog enumerate_pgroups(unsigned p, std::size_t max_order, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_params, "p must be prime");
  if (max_order > limits.order_cap) throw Error(ErrorCode::order_cap, "catalog order exceeds cap");
  Catalog cat;
  cat.prime = p;
  cat.layers.push_back({Group().with_prime(p).with_labels({"1"})});
  for (std::size_t order = p; order <= max_order; order *= p) {
    std::vector<Group> layer;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (const Group& h : cat.layers.back()) {
      for (auto& ext : enumerate_p_extensions(h, p, limits)) {
        auto& bucket = buckets[ext.group.fingerprint()];
        bool dup = false;
        for (std::size_t i : bucket)
          if (is_isomorphic(layer[i], ext.group, limits)) {
            dup = true;
            break;
          }
        if (dup) continue;
        bucket.push_back(layer.size());
        layer.push_back(ext.group);
      }
    }
    cat.layers.push_back(std::move(layer));
  }
  return cat;
}

std::vector<std::vector<Group>> enumerate_small_groups(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.order_cap) throw Error(ErrorCode::order_cap, "catalog order exceeds cap");
  std::vector<std::vector<Group>> layers(max_order + 1);
  if (max_order >= 1) layers[1].push_back(Group().with_labels({"1"}));
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    auto& layer = layers[n];
    for (unsigned q : prime_factors(n)) {
      for (const Group& h : layers[n / q]) {
        for (auto& ext : enumerate_prime_extensions(h, q, limits)) {
          auto& bucket = buckets[ext.group.fingerprint()];
          bool dup = false;
          for (std::size_t i : bucket)
            if (is_isomorphic(layer[i], ext.group, limits)) {
              dup = true;
              break;
            }
          if (dup) continue;
          bucket.push_back(layer.size());
          layer.push_back(ext.group);
        }
      }
    }
  }
  return layers;
}

Order16Classification classify_order16(const Catalog& catalog, const Limits& limits) {
  if (catalog.prime != 2 || catalog.layers.size() <= 4 || catalog.layers[4].size() != 14) {
    throw Error(ErrorCode::incomplete_catalog, "catalog lacks the groups of order 16");
  }
  Order16Classification out;
  const auto& layer = catalog.layers[4];
  for (std::size_t i = 0; i < layer.size(); ++i) {
    const Group& g = layer[i];
    if (is_gk_type(g)) {
      out.gk.push_back(i);
      continue;
    }
    ExtensionOptions opt;
    opt.gk_only = true;
    if (!enumerate_p_extensions(g, 2, limits, opt).empty()) out.roots.push_back(i);
    else out.neither.push_back(i);
  }
  return out;
}

}  // namespace pgk
