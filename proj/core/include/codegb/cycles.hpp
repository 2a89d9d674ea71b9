#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "codegb/binary_matrix.hpp"
#include "codegb/code.hpp"
#include "codegb/groebner.hpp"

namespace codegb {

/// Simple undirected graph with 1-based vertex labels. The edge list
/// order fixes the code coordinates: edge j maps to variable x_{j+1}.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Throws std::invalid_argument on loops, duplicate edges or vertex
    /// labels outside 1..vertex_count.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Number of connected components (isolated vertices count).
std::size_t component_count(const Graph& g);

/// m x |V| matrix with row j carrying ones exactly at the endpoints of
/// edge j; c is a cycle iff c * H = 0.
BinaryMatrix incidence_check_matrix(const Graph& g);

/// The cycle space as a binary code of length m; its dimension is
/// m - |V| + (number of connected components).
BinaryCode cycle_space_code(const Graph& g);

/// One row per non-tree edge: the cycle closed by that edge through a
/// breadth-first spanning forest (roots at the lowest-labeled vertex of
/// each component, edges explored in input order). Rows span the cycle
/// space; a tree yields an empty matrix.
BinaryMatrix fundamental_cycle_basis(const Graph& g);

/// The selection order for minimal cycle bases: head degree first, then
/// codeword weight, then degrevlex on heads and finally on tails.
bool precedes(const Binomial& a, const Binomial& b);

struct MinimalCycles {
    std::size_t min_length = 0;
    std::vector<BitVec> cycles;
};

/// All shortest cycles of the graph, via the minimum-weight codewords of
/// its cycle-space code. Throws std::invalid_argument when the cycle
/// space is trivial.
MinimalCycles minimal_cycles(const Graph& g, const GbLimits& limits = {});

struct CycleBasis {
    std::vector<BitVec> cycles;
    std::size_t total_length = 0;
};

/// Minimum-total-length cycle basis: greedy linear-independence sweep
/// over the basis binomial codewords sorted by `precedes`. Trees get an
/// empty basis.
CycleBasis minimal_cycle_basis(const Graph& g, const GbLimits& limits = {});

/// Matroid-greedy verification oracle: sweeps all 2^k - 1 nonzero
/// codewords sorted by (weight, degrevlex) and returns the total weight
/// of the independent set it extracts. Guarded at k <= 16.
std::size_t oracle_minimal_basis_length(const BinaryCode& code);

/// The edges a cycle vector selects, in coordinate order.
std::vector<Graph::Edge> edges_in_cycle(const Graph& g, const BitVec& cycle);

}  // namespace codegb
