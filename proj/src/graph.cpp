#include "webweaver/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace webweaver {

Graph::Graph(std::uint32_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges)
    : adjacency_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    edge_count_ = edges.size();
}

std::uint32_t Graph::max_degree() const {
    std::uint32_t d = 0;
    for (std::uint32_t v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < n(); ++u)
        for (std::uint32_t v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph gen_complete(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("gen_complete: n must be >= 1");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_petersen() {
    // Outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

Graph gen_hoffman_singleton() {
    // Five pentagons P_h and five pentagrams Q_i on five vertices each.
    // Vertex (P, h, j) has index 5h + j, vertex (Q, i, j) has index 25 + 5i + j.
    // P_h is a 5-cycle, Q_i joins j to j+2 (mod 5), and P_{h,j} is adjacent to
    // Q_{i, h*i + j mod 5} for all i.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    auto p = [](std::uint32_t h, std::uint32_t j) { return 5 * h + j % 5; };
    auto q = [](std::uint32_t i, std::uint32_t j) { return 25 + 5 * i + j % 5; };
    for (std::uint32_t h = 0; h < 5; ++h)
        for (std::uint32_t j = 0; j < 5; ++j) {
            edges.emplace_back(p(h, j), p(h, j + 1));
            if (j < 2) continue;  // emit each pentagram edge once via the j-2 pair below
        }
    for (std::uint32_t i = 0; i < 5; ++i)
        for (std::uint32_t j = 0; j < 5; ++j) edges.emplace_back(q(i, j), q(i, j + 2));
    // Each pentagram edge {j, j+2} appears exactly once per j, and the loop
    // above emits 5 edges per pentagram, which is the full pentagram.
    for (std::uint32_t h = 0; h < 5; ++h)
        for (std::uint32_t j = 0; j < 5; ++j)
            for (std::uint32_t i = 0; i < 5; ++i)
                edges.emplace_back(p(h, j), q(i, (h * i + j) % 5));

    // The pentagon loop emitted {j, j+1} for every j, i.e. each 5-cycle edge
    // exactly once; likewise for pentagrams. Dedup is therefore unnecessary,
    // but the Graph constructor would reject duplicates anyway.
    Graph g(50, edges);

    // Construction-time self-check of the defining Moore-graph properties.
    if (g.edge_count() != 175) throw std::logic_error("hoffman-singleton: edge count");
    for (std::uint32_t v = 0; v < 50; ++v)
        if (g.degree(v) != 7) throw std::logic_error("hoffman-singleton: not 7-regular");
    if (diameter(g) != 2) throw std::logic_error("hoffman-singleton: diameter");
    if (girth(g) != 5) throw std::logic_error("hoffman-singleton: girth");
    return g;
}

Graph gen_barabasi(std::uint32_t n, std::uint32_t m, Rng& rng) {
    if (m < 1 || m >= n) throw std::invalid_argument("gen_barabasi: need 1 <= m < n");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    // Seed clique on vertices 0..m-1.
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    // One entry per unit of degree; sampling from it is preferential attachment.
    std::vector<std::uint32_t> repeated;
    for (auto [u, v] : edges) {
        repeated.push_back(u);
        repeated.push_back(v);
    }
    std::vector<std::uint32_t> targets;
    for (std::uint32_t v = m; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            std::uint32_t t;
            if (repeated.empty()) {
                t = static_cast<std::uint32_t>(rng.below(v));  // degree-0 start (m == 1)
            } else {
                t = repeated[rng.below(repeated.size())];
            }
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (std::uint32_t t : targets) {
            edges.emplace_back(v, t);
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    return Graph(n, edges);
}

Graph gen_line_er(std::uint32_t n, double p, Rng& rng) {
    if (n < 2) throw std::invalid_argument("gen_line_er: n must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_line_er: p must be in [0,1]");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 2; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::uint32_t src) {
    std::vector<std::uint32_t> dist(g.n(), std::numeric_limits<std::uint32_t>::max());
    std::deque<std::uint32_t> queue{src};
    dist.at(src) = 0;
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : g.neighbors(u)) {
            if (dist[v] != std::numeric_limits<std::uint32_t>::max()) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    const auto dist = bfs_distances(g, 0);
    for (std::uint32_t d : dist)
        if (d == std::numeric_limits<std::uint32_t>::max()) return false;
    return true;
}

std::uint32_t diameter(const Graph& g) {
    std::uint32_t diam = 0;
    for (std::uint32_t v = 0; v < g.n(); ++v) {
        for (std::uint32_t d : bfs_distances(g, v)) {
            if (d == std::numeric_limits<std::uint32_t>::max())
                throw std::invalid_argument("diameter: graph is disconnected");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

std::uint32_t girth(const Graph& g) {
    // BFS from each vertex; the first non-tree edge seen closes the shortest
    // cycle through the root that the search can certify.
    std::uint32_t best = 0;
    std::vector<std::uint32_t> dist(g.n());
    std::vector<std::uint32_t> parent(g.n());
    for (std::uint32_t s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max());
        std::deque<std::uint32_t> queue{s};
        dist[s] = 0;
        parent[s] = s;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t v : g.neighbors(u)) {
                if (dist[v] == std::numeric_limits<std::uint32_t>::max()) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && dist[v] + 1 >= dist[u]) {
                    const std::uint32_t cycle = dist[u] + dist[v] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge rows");
        if (u >= n || v >= n) throw std::invalid_argument("edge list: endpoint out of range");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return Graph(static_cast<std::uint32_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("edge list: cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("edge list: cannot write " + path);
    write_edge_list(g, out);
}

}  // namespace webweaver
