#pragma once

#include <map>
#include <set>
#include <string>

namespace gsup {

/// Ground set plus named hyperedges, all by element name.
struct Hypergraph {
    std::set<std::string> ground;
    std::map<std::string, std::set<std::string>> edges;
};

/// Plain adjacency-set graph on named vertices; the verifier-side graph
/// representation, deliberately independent of EmbeddedGraph.
struct SupportGraph {
    std::map<std::string, std::set<std::string>> adj;

    void add_vertex(const std::string& v) { adj[v]; }
    void add_edge(const std::string& u, const std::string& v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    bool has_vertex(const std::string& v) const { return adj.count(v) != 0; }
    std::size_t edge_count() const;
};

} // namespace gsup
