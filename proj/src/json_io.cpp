#include "pgk/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

Json set_labels(const Group& g, const std::vector<Elem>& xs) {
  Json a = Json::array();
  for (Elem x : xs) a.push_back(g.label(x));
  return a;
}

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

}  // namespace

Json group_to_json(const Group& g) {
  Json j;
  j["order"] = g.order();
  Json table = Json::array();
  for (const auto& row : g.rows()) table.push_back(row);
  j["table"] = std::move(table);
  if (g.has_labels()) j["labels"] = g.labels();
  if (auto p = g.prime_hint()) j["prime"] = *p;
  return j;
}

Group group_from_json(const Json& j, const Limits& limits) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
      throw Error(ErrorCode::parse_error, "group JSON needs \"order\" and \"table\"");
    }
    const auto n = j.at("order").get<std::size_t>();
    auto rows = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (rows.size() != n) throw Error(ErrorCode::invalid_table, "table has the wrong number of rows");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::optional<unsigned> prime;
    if (j.contains("prime")) prime = j.at("prime").get<unsigned>();
    Group g = Group::from_rows(rows, std::move(labels), n > 1 ? prime : std::nullopt, limits);
    if (n == 1 && prime) g = g.with_prime(*prime);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

std::string dump_group(const Group& g) { return group_to_json(g).dump(); }

Group parse_group(const std::string& text, const Limits& limits) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  return group_from_json(j, limits);
}

Group read_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), limits);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << text;
}

Json report_to_json(const GkReport& r) {
  Json j;
  j["order"] = r.group.order();
  j["prime"] = r.prime;
  j["exponent"] = r.exponent;
  j["is_gk"] = r.is_gk;
  j["failure"] = std::string(to_string(r.failure));
  j["kernel_size"] = r.kernel.size();
  j["kernel_is_subgroup"] = r.kernel.is_subgroup == Tri::yes;
  j["level"] = r.level;
  j["deficiency"] = r.deficiency;
  j["rank"] = r.rank;
  Json orders = Json::array();
  for (const auto& s : r.series) orders.push_back(s.size());
  j["series_orders"] = std::move(orders);
  j["series_ranks"] = r.series_ranks;
  j["root_order"] = r.root.order();
  Json f;
  f["abelian"] = r.flags.abelian;
  f["regular"] = tri_name(r.flags.regular);
  f["powerful"] = r.flags.powerful;
  f["mep"] = r.flags.mep;
  j["flags"] = std::move(f);
  return j;
}

std::string report_to_text(const GkReport& r) {
  std::ostringstream out;
  if (r.is_gk) {
    out << "GK type: level " << r.level << ", root of order " << r.root.order() << "\n";
  } else {
    switch (r.failure) {
      case GkFailure::not_a_subgroup: out << "not GK: kernel is not a subgroup\n"; break;
      case GkFailure::subgroup_not_maximal: out << "not GK: kernel is non-maximal subgroup\n"; break;
      case GkFailure::trivial_group: out << "not GK: trivial group\n"; break;
      case GkFailure::none: out << "not GK\n"; break;
    }
  }
  out << "order " << r.group.order() << ", prime " << r.prime << ", exponent " << r.exponent << "\n";
  out << "kernel size " << r.kernel.size() << "\n";
  out << "deficiency " << r.deficiency << ", rank " << r.rank << "\n";
  out << "series orders";
  for (const auto& s : r.series) out << " " << s.size();
  out << "\n";
  out << "abelian " << (r.flags.abelian ? "yes" : "no") << ", regular " << tri_name(r.flags.regular)
      << ", powerful " << (r.flags.powerful ? "yes" : "no") << ", mep " << (r.flags.mep ? "yes" : "no")
      << "\n";
  return out.str();
}

Json stems_to_json(const StemAnalysis& s) {
  Json j;
  j["root_order"] = s.root.order();
  j["prime"] = s.prime;
  j["e"] = s.e;
  j["stem_count"] = s.stem_count;
  j["exact"] = s.exact;
  j["stable_beyond_e"] = s.stable_beyond_e;
  Json parts = Json::array();
  for (const auto& p : s.partitions) {
    Json pj;
    pj["level"] = p.level;
    Json sizes = Json::array();
    Json reps = Json::array();
    for (const auto& b : p.blocks) {
      sizes.push_back(b.members.size());
      reps.push_back(s.root.label(b.representative));
    }
    pj["block_sizes"] = std::move(sizes);
    pj["representatives"] = std::move(reps);
    parts.push_back(std::move(pj));
  }
  j["partitions"] = std::move(parts);
  Json br = Json::array();
  for (const auto& b : s.branching) {
    Json bj;
    bj["level"] = b.level;
    bj["parent_block"] = b.parent_block;
    bj["child_blocks"] = b.child_blocks;
    br.push_back(std::move(bj));
  }
  j["branching"] = std::move(br);
  return j;
}

Json tree_to_json(const GkTree& t) {
  Json j;
  j["root_order"] = t.root.order();
  j["mode"] = std::string(to_string(t.mode));
  j["max_level"] = t.max_level;
  j["level_sizes"] = t.level_sizes();
  Json vs = Json::array();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    Json vj;
    vj["id"] = i;
    vj["order"] = v.group.order();
    vj["level"] = v.level;
    vj["parent"] = v.parent ? Json(*v.parent) : Json(nullptr);
    vj["on_stem"] = v.on_stem;
    vj["depth"] = v.depth;
    vj["height"] = v.height;
    vj["rank"] = v.rank;
    vj["orbit_label"] = v.orbit_label ? Json(*v.orbit_label) : Json(nullptr);
    vs.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vs);
  return j;
}

Json kulkarni_to_json(const Group& g, const KulkarniReport& r,
                      const std::vector<std::pair<std::uint64_t, GenusResult>>& genera) {
  Json j;
  j["order"] = g.order();
  j["invariant"] = r.invariant;
  j["gamma"] = r.gamma;
  Json fs = Json::array();
  for (const auto& f : r.factors) {
    Json fj;
    fj["prime"] = f.prime;
    fj["sylow_order"] = f.sylow_order;
    fj["sylow_exponent"] = f.sylow_exponent;
    fs.push_back(std::move(fj));
  }
  j["factors"] = std::move(fs);
  Json gs = Json::array();
  for (const auto& [genus, res] : genera) {
    Json gj;
    gj["genus"] = genus;
    gj["found"] = res.signature.has_value();
    gj["space_fully_covered"] = res.space_fully_covered;
    if (res.signature) {
      gj["h"] = res.signature->h;
      gj["periods"] = res.signature->periods;
      gj["hyperbolic"] = set_labels(g, res.vector->hyperbolic);
      gj["elliptic"] = set_labels(g, res.vector->elliptic);
    }
    gs.push_back(std::move(gj));
  }
  j["genera"] = std::move(gs);
  return j;
}

Json error_to_json(const std::string& code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  return j;
}

}  // namespace pgk
