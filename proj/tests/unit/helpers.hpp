#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "flowcent/examples.hpp"
#include "flowcent/io.hpp"
#include "flowcent/network.hpp"
#include "flowcent/path.hpp"

namespace testing {

inline flowcent::Network fixture(const std::string& name) {
    static const auto all = flowcent::embedded_fixtures();
    return flowcent::parse_network(all.at(name), {}, name);
}

inline std::string fixture_text(const std::string& name) {
    static const auto all = flowcent::embedded_fixtures();
    return all.at(name);
}

inline flowcent::VertexSet set_of(const flowcent::Network& n, std::initializer_list<std::string> tokens) {
    std::vector<std::string> v(tokens);
    return n.resolve(v);
}

inline flowcent::Arc arc(const flowcent::Network& n, const std::string& t, const std::string& h) {
    return flowcent::Arc{n.vertex(t), n.vertex(h)};
}

inline flowcent::ArcDisjointSequence seq(const flowcent::Network& n, std::initializer_list<std::string> paths) {
    std::vector<flowcent::Path> out;
    for (const auto& p : paths) out.push_back(flowcent::parse_path(n, p));
    return flowcent::ArcDisjointSequence(n.vertex("y"), n.vertex("z"), std::move(out));
}

}  // namespace testing
