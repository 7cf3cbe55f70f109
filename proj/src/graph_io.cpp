#include "bdom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "bdom/errors.hpp"

namespace bdom {

namespace {

std::string_view strip_comment(std::string_view line) {
    if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
    return line;
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = strip_comment(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (blank(line)) continue;

        std::istringstream in{std::string(line)};
        if (n < 0) {
            if (!(in >> n) || n < 0) fail(line_no, "expected a non-negative vertex count");
            std::string extra;
            if (in >> extra) fail(line_no, "unexpected token '" + extra + "' after vertex count");
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) fail(line_no, "expected two vertex ids");
        std::string extra;
        if (in >> extra) fail(line_no, "unexpected token '" + extra + "'");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            fail(line_no, "vertex out of range in edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") for n=" + std::to_string(n));
        }
        if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw InputError("empty edge list: missing vertex count");
    return Graph(n, edges);
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file '" + path + "'");
    out << serialize(g);
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
}

}  // namespace bdom
