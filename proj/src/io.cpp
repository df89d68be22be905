#include "flowcent/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace flowcent {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        auto fields = split_ws(line);
        if (!fields.empty() && fields.front().front() != '#') out.push_back(Line{number, std::move(fields)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

class Located {
public:
    explicit Located(std::string_view origin) : origin_(origin) {}

    [[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& message) const {
        throw Error(kind, std::string(origin_) + ":" + std::to_string(line) + ": " + message);
    }

    Capacity integer(std::string_view field, std::size_t line, const char* what) const {
        Capacity value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec == std::errc::result_out_of_range) {
            fail(ErrorKind::CapacityTooLarge, line, std::string(what) + " '" + std::string(field) + "' is out of range");
        }
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            fail(ErrorKind::Parse, line, std::string(what) + " '" + std::string(field) + "' is not an integer");
        }
        return value;
    }

private:
    std::string_view origin_;
};

}  // namespace

Network parse_network(std::string_view text, const ParseOptions& options, std::string_view origin) {
    const Located at(origin);
    const auto lines = content_lines(text);
    if (lines.empty() || lines.front().fields.front() != "vertices") {
        at.fail(ErrorKind::Parse, lines.empty() ? 1 : lines.front().number,
                "expected a 'vertices' line before any arcs");
    }
    const Line& header = lines.front();
    std::vector<std::string> vertices;
    std::set<std::string_view> declared;
    for (std::size_t i = 1; i < header.fields.size(); ++i) {
        auto token = header.fields[i];
        if (!VertexId::is_valid_token(token)) {
            at.fail(ErrorKind::InvalidToken, header.number, "vertex token '" + std::string(token) + "' must match [A-Za-z0-9_]+");
        }
        if (!declared.insert(token).second) {
            at.fail(ErrorKind::DuplicateVertex, header.number, "vertex '" + std::string(token) + "' declared twice");
        }
        vertices.emplace_back(token);
    }
    if (vertices.size() < 2) {
        at.fail(ErrorKind::TooFewVertices, header.number,
                "a network needs at least 2 vertices, got " + std::to_string(vertices.size()));
    }

    std::vector<CapacityEntry> entries;
    std::set<std::pair<std::string_view, std::string_view>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.fields.front() == "vertices") at.fail(ErrorKind::Parse, line.number, "second 'vertices' line");
        if (line.fields.size() != 3) {
            at.fail(ErrorKind::Parse, line.number, "expected 'tail head capacity', got " +
                                                       std::to_string(line.fields.size()) + " fields");
        }
        auto tail = line.fields[0];
        auto head = line.fields[1];
        for (auto token : {tail, head}) {
            if (!declared.contains(token)) {
                at.fail(ErrorKind::UnknownVertex, line.number, "vertex '" + std::string(token) + "' is not declared");
            }
        }
        if (tail == head) {
            at.fail(ErrorKind::SelfLoop, line.number, "arc (" + std::string(tail) + "," + std::string(head) + ") is a self-loop");
        }
        if (!seen.emplace(tail, head).second) {
            at.fail(ErrorKind::DuplicateArc, line.number, "arc (" + std::string(tail) + "," + std::string(head) + ") listed twice");
        }
        Capacity cap = at.integer(line.fields[2], line.number, "capacity");
        if (cap < 0) at.fail(ErrorKind::NegativeCapacity, line.number, "capacity must be nonnegative");
        if (cap > options.max_capacity) {
            at.fail(ErrorKind::CapacityTooLarge, line.number,
                    "capacity " + std::to_string(cap) + " exceeds the limit " + std::to_string(options.max_capacity));
        }
        entries.push_back(CapacityEntry{std::string(tail), std::string(head), cap});
    }
    return Network::build(std::move(vertices), entries);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Network load_network(const std::filesystem::path& path, const ParseOptions& options) {
    return parse_network(read_file(path), options, path.string());
}

std::string serialize_network(const Network& network) {
    std::string out = "vertices";
    for (const auto& id : network.ids()) out += " " + id.token();
    out += '\n';
    for (std::size_t i = 0; i < network.arcs().size(); ++i) {
        const Arc& a = network.arcs()[i];
        out += network.name(a.tail) + " " + network.name(a.head) + " " +
               std::to_string(network.arc_capacities()[i]) + "\n";
    }
    return out;
}

Flow parse_flow(const Network& network, std::string_view text, std::string_view origin) {
    const Located at(origin);
    const auto lines = content_lines(text);
    if (lines.empty() || lines.front().fields.front() != "flow" || lines.front().fields.size() != 4) {
        at.fail(ErrorKind::Parse, lines.empty() ? 1 : lines.front().number, "expected header 'flow y z value'");
    }
    auto resolve = [&](std::string_view token, std::size_t line) {
        auto v = network.find(token);
        if (!v) at.fail(ErrorKind::UnknownVertex, line, "vertex '" + std::string(token) + "' is not in the network");
        return *v;
    };
    const Line& header = lines.front();
    Vertex source = resolve(header.fields[1], header.number);
    Vertex sink = resolve(header.fields[2], header.number);
    if (source == sink) at.fail(ErrorKind::SameEndpoints, header.number, "flow source equals sink");
    Capacity declared = at.integer(header.fields[3], header.number, "flow value");

    std::map<Arc, Capacity> assignment;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.fields.size() != 3) at.fail(ErrorKind::Parse, line.number, "expected 'tail head amount'");
        Arc arc{resolve(line.fields[0], line.number), resolve(line.fields[1], line.number)};
        if (arc.tail == arc.head) at.fail(ErrorKind::SelfLoop, line.number, "flow on a self-loop");
        Capacity amount = at.integer(line.fields[2], line.number, "flow amount");
        if (amount < 0) at.fail(ErrorKind::InvalidFlow, line.number, "flow amount must be nonnegative");
        if (!assignment.emplace(arc, amount).second) {
            at.fail(ErrorKind::DuplicateArc, line.number, "arc " + network.arc_name(arc) + " listed twice");
        }
    }
    Flow flow(source, sink, assignment);
    if (flow_value(flow) != declared) {
        at.fail(ErrorKind::InvalidFlow, header.number,
                "header value " + std::to_string(declared) + " differs from net outflow " +
                    std::to_string(flow_value(flow)));
    }
    return flow;
}

std::string serialize_flow(const Network& network, const Flow& flow) {
    std::string out = "flow " + network.name(flow.source()) + " " + network.name(flow.sink()) + " " +
                      std::to_string(flow_value(flow)) + "\n";
    for (const auto& [arc, amount] : flow.assignment()) {
        out += network.name(arc.tail) + " " + network.name(arc.head) + " " + std::to_string(amount) + "\n";
    }
    return out;
}

}  // namespace flowcent
