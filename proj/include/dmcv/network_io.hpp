#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dmcv/network.hpp"

namespace dmcv {

// Line-oriented network file:
//
//   # comment
//   nodes <n>
//   arcs <m>
//   arc <id> <tail> <head> <capacity>      (one per arc)
//   prob <arc-id> <state> <probability>    (optional)
//
// When any `prob` line is present every arc must carry a full distribution.
// States missing from the listing have probability 0.
struct NetworkDocument {
    Network network;
    std::optional<StateDistribution> distribution;
};

NetworkDocument parse_network(std::string_view text);

// Reads and parses a file; I/O failures are reported as dmcv::Error.
NetworkDocument load_network(const std::filesystem::path& path);

// Canonical text: header, arcs by id, then non-zero probabilities by
// (arc id, descending state). Probabilities use the shortest round-trip
// decimal form, so parse(serialize(x)) == x.
std::string serialize_network(const Network& net, const StateDistribution* dist = nullptr);

} // namespace dmcv
