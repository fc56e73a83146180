#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsfill/catalog.hpp"
#include "qsfill/config.hpp"
#include "qsfill/descriptor.hpp"
#include "qsfill/enumerate.hpp"

namespace qsfill {

// JSON text; indent < 0 gives the compact form.  Parsers throw DomainError.
std::string to_json(const FillingDescriptor& d, int indent = -1);
std::string to_json(const std::vector<FillingDescriptor>& v, int indent = -1);
std::string to_json(const WeightedGraph& g, int indent = -1);
std::string to_json(const Configuration& c, int indent = -1);
std::string to_json(const Witness& w, int indent = -1);
std::string hj_json(std::int64_t n, std::int64_t q, int indent = -1);

FillingDescriptor descriptor_from_json(std::string_view text);
std::vector<FillingDescriptor> descriptors_from_json(std::string_view text);
WeightedGraph graph_from_json(std::string_view text);
Configuration configuration_from_json(std::string_view text);
Witness witness_from_json(std::string_view text);

// Undirected DOT; vertices labelled "name:weight" in a fixed order, cusp
// points drawn as separate marked nodes.
std::string to_dot(const WeightedGraph& g, std::string_view title = "G");
std::string to_dot(const Configuration& c, std::string_view title = "G");

// 64-bit FNV-1a, hex encoded.
std::string digest(std::string_view text);

}  // namespace qsfill
