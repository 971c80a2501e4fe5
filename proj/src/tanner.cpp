#include "pseudocone/tanner.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace pseudocone {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// BFS from one variable node; returns the shortest cycle length seen through
// any non-tree edge, or nullopt.  Nodes: variables are 0..n-1, checks n..n+m-1.
std::optional<std::size_t> bfs_shortest_cycle(const TannerGraph& g, std::size_t start,
                                              std::size_t upper_bound) {
    const std::size_t total = g.n + g.m;
    std::vector<std::size_t> dist(total, kUnvisited);
    std::vector<std::size_t> parent(total, kUnvisited);
    std::queue<std::size_t> q;
    dist[start] = 0;
    q.push(start);
    std::size_t best = kUnvisited;
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        if (2 * dist[u] >= std::min(best, upper_bound)) continue;  // can't improve
        const auto& nbrs = u < g.n ? g.var_neighbors[u] : g.check_neighbors[u - g.n];
        for (std::size_t v : nbrs) {
            const std::size_t w = u < g.n ? v + g.n : v;  // other side's node id
            if (dist[w] == kUnvisited) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push(w);
            } else if (w != parent[u]) {
                // non-tree edge closes a walk through the root
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    if (best == kUnvisited) return std::nullopt;
    return best;
}

}  // namespace

std::optional<std::size_t> girth(const TannerGraph& g) {
    std::size_t best = kUnvisited;
    for (std::size_t v = 0; v < g.n; ++v) {
        if (auto c = bfs_shortest_cycle(g, v, best)) best = std::min(best, *c);
    }
    if (best == kUnvisited) return std::nullopt;
    return best;
}

std::size_t max_pair_intersection(const BinaryMatrix& h) {
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();
    const std::size_t words = (m + 63) / 64;
    // bit-packed columns, then pairwise AND-popcount
    std::vector<std::uint64_t> cols(n * words, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c : h.row_support(r)) cols[c * words + r / 64] |= std::uint64_t{1} << (r % 64);
    std::size_t best = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < words; ++w)
                common += std::popcount(cols[a * words + w] & cols[b * words + w]);
            best = std::max(best, common);
        }
    }
    return best;
}

TannerGraph build_tanner_graph(const BinaryMatrix& h) {
    if (h.is_zero()) throw ZeroMatrix("Tanner graph of an all-zero matrix");
    TannerGraph g;
    g.n = h.cols();
    g.m = h.rows();
    g.check_neighbors.resize(g.m);
    g.var_neighbors.resize(g.n);
    g.row_weights.resize(g.m);
    for (std::size_t r = 0; r < g.m; ++r) {
        g.check_neighbors[r] = h.row_support(r);
        g.row_weights[r] = g.check_neighbors[r].size();
        for (std::size_t c : g.check_neighbors[r]) g.var_neighbors[c].push_back(r);
    }
    g.min_col_weight = std::numeric_limits<std::size_t>::max();
    g.max_col_weight = 0;
    for (std::size_t c = 0; c < g.n; ++c) {
        g.min_col_weight = std::min(g.min_col_weight, g.var_neighbors[c].size());
        g.max_col_weight = std::max(g.max_col_weight, g.var_neighbors[c].size());
    }
    g.girth = girth(g);
    g.max_pair_intersection = g.n >= 2 ? max_pair_intersection(h) : 0;
    return g;
}

}  // namespace pseudocone
