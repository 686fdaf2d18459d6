#include "dijoins/io.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <string>

#include "dijoins/errors.hpp"

namespace dijoins {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
}

void expect_format(const json& doc, const std::string& expected) {
  if (!doc.is_object() || !doc.contains("format") ||
      !doc["format"].is_string() || doc["format"] != expected)
    throw invalid_input("expected a document with format \"" + expected +
                        "\"");
}

Weight integer_field(const json& record, const char* key, Weight minimum) {
  if (!record.contains(key) || !record[key].is_number_integer())
    throw invalid_input(std::string("field \"") + key +
                        "\" must be an integer");
  Weight value = record[key].get<Weight>();
  if (value < minimum)
    throw invalid_input(std::string("field \"") + key + "\" must be at least " +
                        std::to_string(minimum));
  return value;
}

}  // namespace

NodeId Instance::node_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < node_names.size(); ++i)
    if (node_names[i] == name) return static_cast<NodeId>(i);
  throw invalid_input("unknown node \"" + name + "\"");
}

const std::string& Instance::name_of(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= node_names.size())
    throw invalid_input("unknown node id " + std::to_string(v));
  return node_names[v];
}

Instance name_by_id(const WeightedDigraph& g) {
  Instance instance;
  instance.graph = g;
  NodeId top = g.nodes().empty() ? -1 : g.nodes().back();
  for (NodeId v = 0; v <= top; ++v)
    instance.node_names.push_back(std::to_string(v));
  for (NodeId v : g.nodes())
    if (v < 0)
      throw invalid_input("negative node ids cannot be named by position");
  return instance;
}

Instance parse_graph_json(const std::string& text) {
  json doc = parse_or_throw(text);
  expect_format(doc, "dijoins-graph/1");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw invalid_input("\"nodes\" must be a list of names");
  if (!doc.contains("arcs") || !doc["arcs"].is_array())
    throw invalid_input("\"arcs\" must be a list of records");

  Instance instance;
  std::map<std::string, NodeId> id_of;
  for (const json& entry : doc["nodes"]) {
    if (!entry.is_string())
      throw invalid_input("node names must be strings");
    std::string name = entry.get<std::string>();
    NodeId id = static_cast<NodeId>(instance.node_names.size());
    if (!id_of.emplace(name, id).second)
      throw invalid_input("duplicate node name \"" + name + "\"");
    instance.node_names.push_back(std::move(name));
    instance.graph.add_node(id);
  }
  ArcId position = 0;
  for (const json& record : doc["arcs"]) {
    if (!record.is_object() || !record.contains("tail") ||
        !record.contains("head") || !record["tail"].is_string() ||
        !record["head"].is_string())
      throw invalid_input("each arc needs string fields tail and head");
    auto tail = id_of.find(record["tail"].get<std::string>());
    auto head = id_of.find(record["head"].get<std::string>());
    if (tail == id_of.end() || head == id_of.end())
      throw invalid_input("arc references an undeclared node");
    Weight weight = integer_field(record, "weight", 0);
    ArcId id = position;
    if (record.contains("id"))
      id = static_cast<ArcId>(integer_field(record, "id", 0));
    instance.graph.add_arc_with_id(id, tail->second, head->second, weight);
    ++position;
  }
  return instance;
}

std::string write_graph_json(const Instance& instance) {
  const WeightedDigraph& g = instance.graph;
  for (NodeId v : g.nodes())
    if (v < 0 || static_cast<std::size_t>(v) >= instance.node_names.size())
      throw invalid_input("graph node " + std::to_string(v) +
                          " has no name entry");
  json doc;
  doc["format"] = "dijoins-graph/1";
  doc["nodes"] = instance.node_names;
  json arcs = json::array();
  for (const Arc& a : g.arcs()) {
    json record;
    record["tail"] = instance.node_names[a.tail];
    record["head"] = instance.node_names[a.head];
    record["weight"] = a.weight;
    record["id"] = a.id;
    arcs.push_back(std::move(record));
  }
  doc["arcs"] = std::move(arcs);
  return doc.dump(2) + "\n";
}

Packing parse_packing_json(const std::string& text) {
  json doc = parse_or_throw(text);
  expect_format(doc, "dijoins-packing/1");
  if (!doc.contains("tau") ||
      !(doc["tau"].is_null() || doc["tau"].is_number_integer()))
    throw invalid_input("\"tau\" must be an integer or null");
  if (!doc.contains("dijoins") || !doc["dijoins"].is_array())
    throw invalid_input("\"dijoins\" must be a list of records");

  Packing packing;
  if (!doc["tau"].is_null()) {
    Weight tau = doc["tau"].get<Weight>();
    if (tau < 0) throw invalid_input("\"tau\" must be nonnegative");
    packing.tau = tau;
  }
  for (const json& record : doc["dijoins"]) {
    if (!record.is_object() || !record.contains("arcs") ||
        !record["arcs"].is_array())
      throw invalid_input("each dijoin needs an \"arcs\" list");
    PackingEntry entry;
    entry.multiplicity = integer_field(record, "multiplicity", 1);
    for (const json& arc : record["arcs"]) {
      if (!arc.is_number_integer())
        throw invalid_input("arc ids must be integers");
      entry.arcs.push_back(arc.get<ArcId>());
    }
    packing.entries.push_back(std::move(entry));
  }
  return packing;
}

std::string write_packing_json(const Packing& packing) {
  json doc;
  doc["format"] = "dijoins-packing/1";
  if (packing.tau)
    doc["tau"] = *packing.tau;
  else
    doc["tau"] = nullptr;
  json dijoins = json::array();
  for (const PackingEntry& entry : packing.entries) {
    json record;
    record["arcs"] = entry.arcs;
    record["multiplicity"] = entry.multiplicity;
    dijoins.push_back(std::move(record));
  }
  doc["dijoins"] = std::move(dijoins);
  return doc.dump(2) + "\n";
}

}  // namespace dijoins
