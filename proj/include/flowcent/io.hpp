#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "flowcent/flow.hpp"
#include "flowcent/network.hpp"

namespace flowcent {

struct ParseOptions {
    // Keeps sums of capacities well inside 64-bit accumulators.
    Capacity max_capacity = 1'000'000'000;
};

// Network text format:
//   # comment
//   vertices v1 v2 ... vn
//   tail head capacity
// Errors are prefixed with `origin:line:`.
Network parse_network(std::string_view text, const ParseOptions& options = {},
                      std::string_view origin = "<input>");
Network load_network(const std::filesystem::path& path, const ParseOptions& options = {});

// Canonical text: sorted vertices, arcs in canonical order.
std::string serialize_network(const Network& network);

// Flow text format: header `flow y z value`, then `tail head amount` lines.
// The header value must match the assignment's net outflow at y.
Flow parse_flow(const Network& network, std::string_view text, std::string_view origin = "<input>");
std::string serialize_flow(const Network& network, const Flow& flow);

std::string read_file(const std::filesystem::path& path);

}  // namespace flowcent
