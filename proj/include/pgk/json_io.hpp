#pragma once

#include <string>

#include "json.hpp"
#include "pgk/gk.hpp"
#include "pgk/group.hpp"
#include "pgk/kulkarni.hpp"
#include "pgk/stems.hpp"
#include "pgk/tree.hpp"

namespace pgk {

using Json = nlohmann::ordered_json;

/// {"order": n, "table": [[...]], "labels": [...]?, "prime": p?}
Json group_to_json(const Group& g);
/// Validated like Group::from_rows. Error parse-error on malformed input.
Group group_from_json(const Json& j, const Limits& limits = {});

std::string dump_group(const Group& g);
Group parse_group(const std::string& text, const Limits& limits = {});

Group read_group_file(const std::string& path, const Limits& limits = {});
void write_text_file(const std::string& path, const std::string& text);

Json report_to_json(const GkReport& r);
/// One-line-per-fact human summary; the first line is the GK verdict.
std::string report_to_text(const GkReport& r);

Json stems_to_json(const StemAnalysis& s);
Json tree_to_json(const GkTree& t);
Json kulkarni_to_json(const Group& g, const KulkarniReport& r,
                      const std::vector<std::pair<std::uint64_t, GenusResult>>& genera);
Json error_to_json(const std::string& code, const std::string& message);

}  // namespace pgk
