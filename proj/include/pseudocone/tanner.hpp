#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pseudocone/gf2.hpp"

namespace pseudocone {

// Bipartite view of H: variable nodes = columns, check nodes = rows.
// Immutable once built.
struct TannerGraph {
    std::size_t n = 0;  // variable nodes
    std::size_t m = 0;  // check nodes
    std::vector<std::vector<std::size_t>> check_neighbors;  // per check: variable indices
    std::vector<std::vector<std::size_t>> var_neighbors;    // per variable: check indices

    std::optional<std::size_t> girth;  // nullopt = acyclic ("infinite")
    std::size_t min_col_weight = 0;    // gamma
    std::size_t max_col_weight = 0;
    std::vector<std::size_t> row_weights;      // rho_j
    std::size_t max_pair_intersection = 0;     // lambda
};

TannerGraph build_tanner_graph(const BinaryMatrix& h);  // throws ZeroMatrix

// Shortest cycle length via BFS from every variable node; nullopt if acyclic.
std::optional<std::size_t> girth(const TannerGraph& g);

// Max over column pairs of the number of shared checks; requires n >= 2.
std::size_t max_pair_intersection(const BinaryMatrix& h);

}  // namespace pseudocone
