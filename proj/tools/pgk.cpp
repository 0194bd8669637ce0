// pgk: command-line front end for the GK library.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pgk/extensions.hpp"
#include "pgk/families.hpp"
#include "pgk/gk.hpp"
#include "pgk/json_io.hpp"
#include "pgk/kulkarni.hpp"
#include "pgk/search.hpp"
#include "pgk/stems.hpp"
#include "pgk/subgroups.hpp"
#include "pgk/tree.hpp"

using namespace pgk;

namespace {

struct Globals {
  std::size_t order_cap = 0;  // 0: default or PGK_ORDER_CAP
  std::size_t aut_bound = 0;
  std::size_t assoc_bound = 0;
  unsigned threads = 1;
  std::string format;
  std::string output;

  Limits limits() const {
    Limits l;
    if (order_cap) l.order_cap = order_cap;
    if (aut_bound) l.automorphism_order_bound = aut_bound;
    if (assoc_bound) l.associativity_check_bound = assoc_bound;
    l.threads = threads;
    return l;
  }
};

// family:..., catalog:<order>#<index> (1-based), or a JSON file path
Group load_group(const std::string& spec, const Limits& limits) {
  if (spec.rfind("family:", 0) == 0) return make_family(spec, limits);
  if (spec.rfind("catalog:", 0) == 0) {
    const std::string body = spec.substr(8);
    const auto hash = body.find('#');
    if (hash == std::string::npos) throw Error(ErrorCode::parse_error, "catalog spec is catalog:<order>#<index>");
    std::size_t order = 0, index = 0;
    try {
      order = std::stoul(body.substr(0, hash));
      index = std::stoul(body.substr(hash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "catalog spec is catalog:<order>#<index>");
    }
    std::vector<Group> layer;
    if (order == 1) {
      layer.push_back(Group());
    } else if (auto p = prime_power_base(order)) {
      layer = enumerate_pgroups(*p, order, limits).layers.back();
    } else {
      layer = enumerate_small_groups(order, limits)[order];
    }
    if (index == 0 || index > layer.size()) {
      throw Error(ErrorCode::invalid_params, "catalog index out of range (1.." + std::to_string(layer.size()) + ")");
    }
    return layer[index - 1];
  }
  return read_group_file(spec, limits);
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) std::cout << text;
  else write_text_file(g.output, text);
}

std::string format_or(const Globals& g, const std::string& fallback) {
  return g.format.empty() ? fallback : g.format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-group GK analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--order-cap", glob.order_cap, "maximum group order handled (default 512 or $PGK_ORDER_CAP)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{65536}));
  app.add_option("--aut-bound", glob.aut_bound, "largest order for listing all automorphisms")
      ->check(CLI::PositiveNumber);
  app.add_option("--assoc-bound", glob.assoc_bound, "largest order checked for associativity on input")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", glob.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", glob.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--output", glob.output, "write output to this file");

  std::string group_spec;
  auto* analyze = app.add_subcommand("analyze", "GK diagnosis of a p-group");
  analyze->add_option("--group", group_spec, "family:..., catalog:<order>#<i> or a JSON file")->required();
  bool no_flags = false;
  analyze->add_flag("--no-flags", no_flags, "skip the class predicates");

  unsigned prime = 0;
  std::size_t max_order = 0;
  bool classify = false;
  auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes of p-groups up to an order");
  enumerate->add_option("--prime", prime, "prime p")->required();
  enumerate->add_option("--max-order", max_order, "largest order p^k")->required();
  enumerate->add_flag("--classify16", classify, "partition the groups of order 16 (p = 2)");

  unsigned max_level = 1;
  std::string mode = "full";
  auto* tree = app.add_subcommand("tree", "GK tree of a non-GK root");
  tree->add_option("--root", group_spec, "root group")->required();
  tree->add_option("--max-level", max_level, "deepest level built")->required();
  tree->add_option("--mode", mode, "full or stems-only")->check(CLI::IsMember({"full", "stems-only"}));
  tree->add_option("--prime", prime, "prime for the trivial root");

  auto* stems = app.add_subcommand("stems", "stem orbits of a root");
  stems->add_option("--group", group_spec, "root group")->required();

  std::uint64_t genus_max = 0;
  GenusLimits glimits;
  auto* kulk = app.add_subcommand("kulkarni", "Kulkarni invariant and genus search");
  kulk->add_option("--group", group_spec, "group (any finite group)")->required();
  kulk->add_option("--genus-max", genus_max, "search genera 2..genus-max");
  kulk->add_option("--max-r", glimits.max_r, "largest number of periods");
  kulk->add_option("--max-h", glimits.max_h, "largest orbit genus");
  kulk->add_option("--max-nodes", glimits.max_nodes, "genus search node budget");

  std::string family_spec;
  bool list = false;
  auto* family = app.add_subcommand("family", "build a named group and print its JSON");
  family->add_option("--name", family_spec, "e.g. quaternion(l=1)");
  family->add_flag("--list", list, "list the families");

  std::string other_spec;
  bool isoclinic = false;
  auto* iso = app.add_subcommand("iso", "isomorphism or isoclinism test");
  iso->add_option("--a", group_spec, "first group")->required();
  iso->add_option("--b", other_spec, "second group")->required();
  iso->add_flag("--isoclinic", isoclinic, "test isoclinism instead");

  auto* classes = app.add_subcommand("classes", "abelian, regular, powerful and MEP predicates");
  classes->add_option("--group", group_spec, "p-group")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Limits limits = glob.limits();
    if (*analyze) {
      Group g = load_group(group_spec, limits);
      GkOptions opt;
      opt.flags = !no_flags;
      GkReport r = gk_report(g, limits, opt);
      const std::string f = format_or(glob, "text");
      if (f == "dot") throw Error(ErrorCode::invalid_params, "analyze has no dot output");
      emit(glob, f == "json" ? report_to_json(r).dump(2) + "\n" : report_to_text(r));
    } else if (*enumerate) {
      Catalog cat = enumerate_pgroups(prime, max_order, limits);
      Json j;
      j["prime"] = prime;
      Json layers = Json::array();
      std::uint64_t order = 1;
      for (const auto& layer : cat.layers) {
        std::size_t gk = 0;
        for (const auto& g : layer)
          if (g.order() > 1 && is_gk_type(g)) ++gk;
        Json lj;
        lj["order"] = order;
        lj["count"] = layer.size();
        lj["gk_count"] = gk;
        layers.push_back(std::move(lj));
        std::cerr << "order " << order << ": " << layer.size() << " groups\n";
        order *= prime;
      }
      j["layers"] = std::move(layers);
      if (classify) {
        Order16Classification c = classify_order16(cat, limits);
        auto one_based = [](std::vector<std::size_t> v) {
          for (auto& x : v) ++x;
          return v;
        };
        j["order16"] = {{"gk", one_based(c.gk)}, {"roots", one_based(c.roots)}, {"neither", one_based(c.neither)}};
      }
      if (format_or(glob, "json") == "text") {
        std::ostringstream out;
        for (const auto& l : j["layers"]) out << l["order"] << " " << l["count"] << " " << l["gk_count"] << "\n";
        emit(glob, out.str());
      } else {
        emit(glob, j.dump(2) + "\n");
      }
    } else if (*tree) {
      Group r = load_group(group_spec, limits);
      GkTree t = build_tree(r, max_level, mode == "full" ? TreeMode::full : TreeMode::stems_only, limits, prime);
      const std::string f = format_or(glob, "dot");
      if (f == "dot") {
        emit(glob, to_dot(t));
      } else if (f == "json") {
        emit(glob, tree_to_json(t).dump(2) + "\n");
      } else {
        std::ostringstream out;
        for (std::size_t i = 0; i < t.vertices.size(); ++i) {
          const auto& v = t.vertices[i];
          out << "v" << i << " level " << v.level << " order " << v.group.order() << " rank " << v.rank
              << (v.on_stem ? " stem" : "");
          if (v.parent) out << " parent v" << *v.parent;
          if (v.orbit_label) out << " " << *v.orbit_label;
          out << "\n";
        }
        emit(glob, out.str());
      }
    } else if (*stems) {
      Group r = load_group(group_spec, limits);
      StemAnalysis s = stem_analysis(r, limits);
      emit(glob, stems_to_json(s).dump(2) + "\n");
    } else if (*kulk) {
      Group g = load_group(group_spec, limits);
      KulkarniReport r = kulkarni_report(g);
      std::vector<std::pair<std::uint64_t, GenusResult>> genera;
      for (std::uint64_t genus = 2; genus <= genus_max; ++genus) {
        genera.emplace_back(genus, genus_search(g, genus, glimits));
        std::cerr << "genus " << genus << " done\n";
      }
      Json j = kulkarni_to_json(g, r, genera);
      if (format_or(glob, "json") == "text") {
        std::ostringstream out;
        out << "N(G) = " << r.invariant << ", gamma = " << r.gamma << "\n";
        for (const auto& f : r.factors)
          out << "p = " << f.prime << ": |G_p| = " << f.sylow_order << ", exp = " << f.sylow_exponent << "\n";
        for (const auto& [genus, res] : genera) {
          out << "genus " << genus << ": ";
          if (res.signature) {
            out << "h = " << res.signature->h << ", periods";
            for (unsigned p : res.signature->periods) out << " " << p;
          } else {
            out << (res.space_fully_covered ? "absent" : "none found");
          }
          out << "\n";
        }
        emit(glob, out.str());
      } else {
        emit(glob, j.dump(2) + "\n");
      }
    } else if (*family) {
      if (list) {
        std::ostringstream out;
        for (const auto& f : family_catalog()) out << f.name << "(" << f.params << ")  " << f.description << "\n";
        emit(glob, out.str());
      } else {
        if (family_spec.empty()) throw Error(ErrorCode::invalid_params, "--name or --list is required");
        emit(glob, dump_group(make_family(family_spec, limits)) + "\n");
      }
    } else if (*iso) {
      Group a = load_group(group_spec, limits);
      Group b = load_group(other_spec, limits);
      Json j;
      if (isoclinic) {
        j["isoclinic"] = is_isoclinic(a, b, limits);
      } else {
        auto m = isomorphism(a, b, limits);
        j["isomorphic"] = m.has_value();
        if (m) j["images"] = m->images;
      }
      emit(glob, j.dump() + "\n");
    } else if (*classes) {
      Group g = load_group(group_spec, limits);
      if (g.order() > 1 && !g.prime()) throw Error(ErrorCode::not_a_p_group, "classes needs a p-group");
      Json j;
      j["order"] = g.order();
      j["abelian"] = g.is_abelian();
      try {
        j["regular"] = is_regular(g, limits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::bound_exceeded) throw;
        j["regular"] = nullptr;
      }
      j["powerful"] = is_powerful(g);
      j["mep"] = has_mep(g);
      j["gk"] = g.order() > 1 && is_gk_type(g);
      emit(glob, j.dump(2) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << error_to_json(std::string(to_string(e.code())), e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_to_json("internal", e.what()).dump() << "\n";
    return 1;
  }
  return 0;
}
