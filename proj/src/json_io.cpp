#include "softtop/json_io.hpp"

#include <fstream>
#include <sstream>

namespace softtop::io {

namespace {

[[noreturn]] void rethrow_parse_error(const nlohmann::json::parse_error& e,
                                      const std::string& text) {
  // nlohmann reports a byte offset; translate to line/column.
  int line = 1, col = 1;
  const size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
  for (size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(e.what(), line, col);
}

void require_keys(const Json& obj, const std::string& where,
                  const std::vector<std::string>& allowed) {
  if (!obj.is_object()) throw SchemaError(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (key == a) ok = true;
    if (!ok) throw SchemaError(where + "." + key, "unknown field");
  }
  for (const auto& a : allowed)
    if (!obj.contains(a)) throw SchemaError(where + "." + a, "missing field");
}

std::vector<std::string> string_array(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw SchemaError(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

PointSet parse_point_set(const Context& ctx, const Json& arr, const std::string& where) {
  std::vector<std::string> labels = string_array(arr, where);
  try {
    return PointSet::of(ctx, labels);
  } catch (const UnknownPoint& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

SoftSet parse_soft_set(const ContextPtr& ctx, const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where, "expected a parameter -> point list object");
  std::vector<std::pair<std::string, PointSet>> pairs;
  for (const auto& [param, value] : obj.items())
    pairs.emplace_back(param, parse_point_set(*ctx, value, where + "." + param));
  try {
    return SoftSet::make(ctx, pairs);
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace

bool Document::operator==(const Document& other) const {
  if (schema_version != other.schema_version || kind != other.kind) return false;
  if (*ctx != *other.ctx) return false;
  auto masks = [](const std::vector<SoftSet>& v) {
    std::vector<Mask> m;
    for (const auto& s : v) m.push_back(s.mask());
    return m;
  };
  return masks(soft_sets) == masks(other.soft_sets) && point_sets == other.point_sets &&
         system == other.system;
}

std::string kind_name(Document::Kind kind) {
  switch (kind) {
    case Document::Kind::SoftTopology: return "soft-topology";
    case Document::Kind::CrispTopology: return "crisp-topology";
    case Document::Kind::CrispSystem: return "crisp-system";
    case Document::Kind::SoftSetList: return "soft-set-list";
  }
  return "?";
}

Document parse(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_parse_error(e, text);
  }
  require_keys(root, "$", {"schema_version", "context", "payload"});
  Document doc;
  if (!root["schema_version"].is_string())
    throw SchemaError("schema_version", "expected a string");
  doc.schema_version = root["schema_version"].get<std::string>();
  if (doc.schema_version != kSchemaVersion)
    throw SchemaError("schema_version", "unsupported version '" + doc.schema_version + "'");

  const Json& cj = root["context"];
  require_keys(cj, "context", {"universe", "parameters"});
  try {
    doc.ctx = make_context(string_array(cj["universe"], "context.universe"),
                           string_array(cj["parameters"], "context.parameters"));
  } catch (const InvalidContext& e) {
    throw SchemaError("context", e.what());
  }

  const Json& pj = root["payload"];
  if (!pj.is_object() || !pj.contains("type") || !pj["type"].is_string())
    throw SchemaError("payload.type", "missing payload type");
  const std::string type = pj["type"].get<std::string>();
  if (type == "soft-topology" || type == "soft-set-list") {
    const char* list_key = type == "soft-topology" ? "opens" : "sets";
    doc.kind = type == "soft-topology" ? Document::Kind::SoftTopology
                                       : Document::Kind::SoftSetList;
    require_keys(pj, "payload", {"type", list_key});
    const Json& arr = pj[list_key];
    if (!arr.is_array()) throw SchemaError(std::string("payload.") + list_key, "expected an array");
    int idx = 0;
    for (const auto& item : arr)
      doc.soft_sets.push_back(parse_soft_set(
          doc.ctx, item, std::string("payload.") + list_key + "[" + std::to_string(idx++) + "]"));
  } else if (type == "crisp-topology") {
    doc.kind = Document::Kind::CrispTopology;
    require_keys(pj, "payload", {"type", "opens"});
    const Json& arr = pj["opens"];
    if (!arr.is_array()) throw SchemaError("payload.opens", "expected an array");
    int idx = 0;
    for (const auto& item : arr)
      doc.point_sets.push_back(
          parse_point_set(*doc.ctx, item, "payload.opens[" + std::to_string(idx++) + "]"));
  } else if (type == "crisp-system") {
    doc.kind = Document::Kind::CrispSystem;
    require_keys(pj, "payload", {"type", "topologies"});
    const Json& obj = pj["topologies"];
    if (!obj.is_object()) throw SchemaError("payload.topologies", "expected an object");
    doc.system.assign(doc.ctx->params(), {});
    std::vector<bool> seen(doc.ctx->params(), false);
    for (const auto& [param, arr] : obj.items()) {
      int j;
      try {
        j = doc.ctx->param_index(param);
      } catch (const UnknownParameter&) {
        throw SchemaError("payload.topologies." + param, "unknown parameter");
      }
      seen[j] = true;
      if (!arr.is_array())
        throw SchemaError("payload.topologies." + param, "expected an array of point lists");
      int idx = 0;
      for (const auto& item : arr)
        doc.system[j].push_back(parse_point_set(
            *doc.ctx, item, "payload.topologies." + param + "[" + std::to_string(idx++) + "]"));
    }
    for (int j = 0; j < doc.ctx->params(); ++j)
      if (!seen[j])
        throw ValidationError("payload.topologies: missing parameter: " +
                              doc.ctx->param_label(j));
  } else {
    throw SchemaError("payload.type", "unknown payload type '" + type + "'");
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json context_to_json(const Context& ctx) {
  Json j;
  j["universe"] = ctx.universe();
  j["parameters"] = ctx.parameters();
  return j;
}

Json point_set_to_json(const Context& ctx, PointSet s) {
  return Json(s.labels(ctx));
}

Json soft_set_to_json(const SoftSet& s) {
  Json j = Json::object();
  const Context& ctx = *s.context();
  for (int p = 0; p < ctx.params(); ++p)
    j[ctx.param_label(p)] = point_set_to_json(ctx, s.slice(p));
  return j;
}

std::string serialize(const Document& doc) {
  Json root;
  root["schema_version"] = doc.schema_version;
  root["context"] = context_to_json(*doc.ctx);
  Json payload;
  payload["type"] = kind_name(doc.kind);
  switch (doc.kind) {
    case Document::Kind::SoftTopology:
    case Document::Kind::SoftSetList: {
      Json arr = Json::array();
      for (const auto& s : doc.soft_sets) arr.push_back(soft_set_to_json(s));
      payload[doc.kind == Document::Kind::SoftTopology ? "opens" : "sets"] = arr;
      break;
    }
    case Document::Kind::CrispTopology: {
      Json arr = Json::array();
      for (PointSet s : doc.point_sets) arr.push_back(point_set_to_json(*doc.ctx, s));
      payload["opens"] = arr;
      break;
    }
    case Document::Kind::CrispSystem: {
      Json obj = Json::object();
      for (int j = 0; j < doc.ctx->params(); ++j) {
        Json arr = Json::array();
        for (PointSet s : doc.system[j]) arr.push_back(point_set_to_json(*doc.ctx, s));
        obj[doc.ctx->param_label(j)] = arr;
      }
      payload["topologies"] = obj;
      break;
    }
  }
  root["payload"] = payload;
  return root.dump(2) + "\n";
}

Document make_document(const SoftTopology& t) {
  Document doc;
  doc.ctx = t.context();
  doc.kind = Document::Kind::SoftTopology;
  doc.soft_sets = t.open_sets();
  return doc;
}

Document make_document(const CrispTopology& t) {
  Document doc;
  doc.ctx = t.context();
  doc.kind = Document::Kind::CrispTopology;
  doc.point_sets = t.opens();
  return doc;
}

Document make_document(const CrispSystem& s) {
  Document doc;
  doc.ctx = s.context();
  doc.kind = Document::Kind::CrispSystem;
  for (const auto& t : s.topologies()) doc.system.push_back(t.opens());
  return doc;
}

Document make_soft_set_list(const ContextPtr& ctx, std::vector<SoftSet> sets) {
  Document doc;
  doc.ctx = ctx;
  doc.kind = Document::Kind::SoftSetList;
  doc.soft_sets = std::move(sets);
  return doc;
}

SoftTopology to_soft_topology(const Document& doc) {
  if (doc.kind != Document::Kind::SoftTopology)
    throw ValidationError("expected a soft-topology document, got " + kind_name(doc.kind));
  std::vector<Mask> masks;
  for (const auto& s : doc.soft_sets) masks.push_back(s.mask());
  return SoftTopology(doc.ctx, std::move(masks));
}

CrispTopology to_crisp_topology(const Document& doc) {
  if (doc.kind != Document::Kind::CrispTopology)
    throw ValidationError("expected a crisp-topology document, got " + kind_name(doc.kind));
  return CrispTopology(doc.ctx, doc.point_sets);
}

CrispSystem to_system(const Document& doc) {
  if (doc.kind != Document::Kind::CrispSystem)
    throw ValidationError("expected a crisp-system document, got " + kind_name(doc.kind));
  std::vector<CrispTopology> per_param;
  for (const auto& opens : doc.system) per_param.emplace_back(doc.ctx, opens);
  return CrispSystem(doc.ctx, std::move(per_param));
}

}  // namespace softtop::io
