#include "medalg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "medalg/order.hpp"

namespace medalg {

CoveringGraph covering_graph(const MedianAlgebra& a, Element p) {
    InducedOrder o(a, p);
    CoveringGraph g;
    g.vertex_count = a.size();
    g.basepoint = p;
    for (auto [child, parent] : cover_pairs(o)) {
        g.edges.emplace_back(std::min(child, parent), std::max(child, parent));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

std::vector<std::vector<int>> bfs_distances(const CoveringGraph& g) {
    const int n = g.vertex_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw IndexOutOfRange("edge endpoint out of range");
        }
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (d[static_cast<std::size_t>(v)] < 0) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (d[static_cast<std::size_t>(v)] < 0) {
                throw DisconnectedGraph("vertex " + std::to_string(v) +
                                        " is unreachable from vertex " + std::to_string(s));
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<Triple> median_graph_witness(const CoveringGraph& g) {
    const int n = g.vertex_count;
    if (n == 0) {
        throw MalformedTable("graph needs at least one vertex");
    }
    auto dist = bfs_distances(g);
    auto between = [&](int a, int v, int b) {
        return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)] +
                   dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)] ==
               dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                int count = 0;
                for (int v = 0; v < n; ++v) {
                    if (between(a, v, b) && between(b, v, c) && between(a, v, c)) {
                        ++count;
                    }
                }
                if (count != 1) {
                    return Triple{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_median_graph(const CoveringGraph& g) {
    return !median_graph_witness(g).has_value();
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string export_dot(const CoveringGraph& g, const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.vertex_count)) {
        throw LabelMismatch("label count " + std::to_string(labels.size()) +
                            " does not match vertex count " +
                            std::to_string(g.vertex_count));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        out << "  " << v;
        if (!labels.empty()) {
            out << " [label=" << quote(labels[static_cast<std::size_t>(v)]) << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : edges) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace medalg
