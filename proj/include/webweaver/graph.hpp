#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "webweaver/rng.hpp"

namespace webweaver {

/// Simple undirected graph with 0-based vertex indices and sorted adjacency
/// lists. Immutable after construction; instances are shared freely across
/// concurrently running trajectories.
class Graph {
public:
    Graph() = default;

    /// Build from an edge list. Throws std::invalid_argument on self-loops,
    /// duplicate edges, or out-of-range endpoints.
    Graph(std::uint32_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    std::uint32_t n() const { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return adjacency_.at(v);
    }
    std::uint32_t degree(std::uint32_t v) const {
        return static_cast<std::uint32_t>(adjacency_.at(v).size());
    }
    std::uint32_t max_degree() const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    /// Every edge once, with u < v, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::size_t edge_count_ = 0;
};

// ---- generators -----------------------------------------------------------

/// Complete graph K_n, n >= 1.
Graph gen_complete(std::uint32_t n);

/// The Petersen graph: 10 vertices, 15 edges, 3-regular, girth 5, diameter 2.
Graph gen_petersen();

/// The Hoffman-Singleton graph: 50 vertices, 175 edges, 7-regular, diameter 2,
/// girth 5. Built from the pentagon/pentagram construction and self-checked
/// against those properties at construction time.
Graph gen_hoffman_singleton();

/// Preferential-attachment graph: seeded with an m-clique, each arriving
/// vertex attaches m edges to distinct existing vertices with probability
/// proportional to degree. Requires 1 <= m < n. Always connected.
Graph gen_barabasi(std::uint32_t n, std::uint32_t m, Rng& rng);

/// Random graph on n >= 2 vertices that always contains the path edges
/// (i, i+1); every other pair is included independently with probability p.
/// Connected for every seed and p.
Graph gen_line_er(std::uint32_t n, double p, Rng& rng);

// ---- queries ---------------------------------------------------------------

/// True iff a single BFS from vertex 0 reaches all vertices (true for K_1).
bool is_connected(const Graph& g);

/// BFS hop distances from src; unreachable vertices get UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const Graph& g, std::uint32_t src);

/// Largest finite BFS distance over all pairs; throws on disconnected input.
std::uint32_t diameter(const Graph& g);

/// Length of the shortest cycle; 0 if the graph is acyclic.
std::uint32_t girth(const Graph& g);

// ---- edge-list text format --------------------------------------------------
// First line "n m", then m lines "u v", one per undirected edge.

void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace webweaver
