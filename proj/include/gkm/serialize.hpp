#pragma once

#include "gkm/gkm_graph.hpp"
#include "gkm/parabolic.hpp"

#include <json.hpp>

#include <string>

namespace gkm {

using Json = nlohmann::ordered_json;

Json graph_to_json(const GkmGraph& g);
std::shared_ptr<GkmGraph> graph_from_json(const Json& j);
// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
std::string graph_hash(const GkmGraph& g);
std::string fnv1a_hex(const std::string& s);

Json class_to_json(const CohClass& c);
CohClass class_from_json(const Json& j, GraphPtr g);

std::string graph_to_dot(const GkmGraph& g);

Json bundle_to_json(const BundleMap& b);
BundleMap bundle_from_json(const Json& j);
std::string bundle_hash(const BundleMap& b);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gkm
