#ifndef SOFTTOP_JSON_IO_HPP
#define SOFTTOP_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "softtop/generators.hpp"
#include "softtop/topology.hpp"

namespace softtop::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// On-disk unit: a context plus one payload. Payload member order is
/// preserved through parse/serialize round trips.
struct Document {
  enum class Kind { SoftTopology, CrispTopology, CrispSystem, SoftSetList };

  std::string schema_version = kSchemaVersion;
  ContextPtr ctx;
  Kind kind = Kind::SoftTopology;
  std::vector<SoftSet> soft_sets;                // soft-topology / soft-set-list, file order
  std::vector<PointSet> point_sets;              // crisp-topology, file order
  std::vector<std::vector<PointSet>> system;     // crisp-system, context parameter order

  bool operator==(const Document& other) const;
};

std::string kind_name(Document::Kind kind);

Document parse(const std::string& text);
Document parse_file(const std::string& path);
std::string serialize(const Document& doc);

Document make_document(const SoftTopology& t);
Document make_document(const CrispTopology& t);
Document make_document(const CrispSystem& s);
Document make_soft_set_list(const ContextPtr& ctx, std::vector<SoftSet> sets);

SoftTopology to_soft_topology(const Document& doc);
CrispTopology to_crisp_topology(const Document& doc);
CrispSystem to_system(const Document& doc);

Json point_set_to_json(const Context& ctx, PointSet s);
Json soft_set_to_json(const SoftSet& s);
Json context_to_json(const Context& ctx);

}  // namespace softtop::io

#endif
