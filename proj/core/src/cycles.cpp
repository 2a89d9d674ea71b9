#include "codegb/cycles.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "codegb/errors.hpp"

namespace codegb {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::set<Edge> seen;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto [u, v] = edges_[j];
        if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(j + 1) + " (" +
                                        std::to_string(u) + "," + std::to_string(v) +
                                        ") has a vertex outside 1.." +
                                        std::to_string(vertex_count_));
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(j + 1) + " is a loop at " +
                                        std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    }
}

std::size_t component_count(const Graph& g) {
    std::vector<std::vector<std::size_t>> adjacency(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    std::vector<bool> visited(g.vertex_count() + 1, false);
    std::size_t components = 0;
    for (std::size_t root = 1; root <= g.vertex_count(); ++root) {
        if (visited[root]) continue;
        ++components;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        visited[root] = true;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v : adjacency[u]) {
                if (visited[v]) continue;
                visited[v] = true;
                frontier.push(v);
            }
        }
    }
    return components;
}

BinaryMatrix incidence_check_matrix(const Graph& g) {
    BinaryMatrix h(g.edge_count(), g.vertex_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        h.set(j, g.edges()[j].first - 1, true);
        h.set(j, g.edges()[j].second - 1, true);
    }
    return h;
}

BinaryCode cycle_space_code(const Graph& g) {
    return BinaryCode::from_check(incidence_check_matrix(g));
}

BinaryMatrix fundamental_cycle_basis(const Graph& g) {
    const std::size_t n_vertices = g.vertex_count();
    const std::size_t m = g.edge_count();

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n_vertices + 1);
    for (std::size_t j = 0; j < m; ++j) {
        auto [u, v] = g.edges()[j];
        adjacency[u].push_back({j, v});
        adjacency[v].push_back({j, u});
    }

    // Breadth-first spanning forest; root_path[v] is the edge set of the
    // tree path from v back to its component root.
    std::vector<bool> visited(n_vertices + 1, false);
    std::vector<bool> tree_edge(m, false);
    std::vector<BitVec> root_path(n_vertices + 1, BitVec(m));
    for (std::size_t root = 1; root <= n_vertices; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (auto [j, v] : adjacency[u]) {
                if (visited[v]) continue;
                visited[v] = true;
                tree_edge[j] = true;
                root_path[v] = root_path[u];
                root_path[v].set(j, true);
                frontier.push(v);
            }
        }
    }

    std::vector<BitVec> rows;
    for (std::size_t j = 0; j < m; ++j) {
        if (tree_edge[j]) continue;
        auto [u, v] = g.edges()[j];
        BitVec cycle = root_path[u] ^ root_path[v];
        cycle.set(j, true);
        rows.push_back(std::move(cycle));
    }
    return BinaryMatrix::from_rows(std::move(rows), m);
}

bool precedes(const Binomial& a, const Binomial& b) {
    const unsigned da = a.head.total_degree();
    const unsigned db = b.head.total_degree();
    if (da != db) return da < db;
    const std::size_t wa = binomial_codeword(a).count();
    const std::size_t wb = binomial_codeword(b).count();
    if (wa != wb) return wa < wb;
    if (auto c = degrevlex_order(a.head, b.head); c != 0)
        return c == std::strong_ordering::less;
    return degrevlex_order(a.tail, b.tail) == std::strong_ordering::less;
}

namespace {

// Incremental GF(2) elimination; keeps reduced pivot rows.
class IndependenceSieve {
public:
    // Returns true (and absorbs the vector) when v is independent of
    // everything accepted so far.
    bool accept(BitVec v) {
        for (const auto& [pivot, row] : pivots_)
            if (v.get(pivot)) v ^= row;
        if (v.is_zero()) return false;
        std::size_t pivot = 0;
        while (!v.get(pivot)) ++pivot;
        pivots_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, BitVec>> pivots_;
};

}  // namespace

MinimalCycles minimal_cycles(const Graph& g, const GbLimits& limits) {
    const BinaryCode code = cycle_space_code(g);
    if (code.dimension() == 0)
        throw std::invalid_argument("minimal_cycles: the graph has no cycles");
    const GroebnerBasis gb = compute_groebner_basis(code, limits);
    MinWeightCodewords mw = min_weight_codewords(gb);
    return MinimalCycles{mw.min_weight, std::move(mw.codewords)};
}

CycleBasis minimal_cycle_basis(const Graph& g, const GbLimits& limits) {
    const BinaryCode code = cycle_space_code(g);
    CycleBasis basis;
    if (code.dimension() == 0) return basis;

    const GroebnerBasis gb = compute_groebner_basis(code, limits);
    std::vector<const Binomial*> ordered;
    for (const Binomial& b : gb.elements())
        if (binomial_codeword(b).any()) ordered.push_back(&b);
    std::sort(ordered.begin(), ordered.end(),
              [](const Binomial* a, const Binomial* b) { return precedes(*a, *b); });

    IndependenceSieve sieve;
    for (const Binomial* b : ordered) {
        BitVec cycle = binomial_codeword(*b);
        if (!sieve.accept(cycle)) continue;
        basis.total_length += cycle.count();
        basis.cycles.push_back(std::move(cycle));
        if (basis.cycles.size() == code.dimension()) break;
    }
    return basis;
}

std::size_t oracle_minimal_basis_length(const BinaryCode& code) {
    if (code.dimension() > 16)
        throw ResourceError("oracle_minimal_basis_length: dimension " +
                            std::to_string(code.dimension()) + " exceeds the exhaustive limit 16");
    std::vector<BitVec> nonzero;
    for (BitVec& c : code.codewords())
        if (c.any()) nonzero.push_back(std::move(c));
    std::sort(nonzero.begin(), nonzero.end(), [](const BitVec& a, const BitVec& b) {
        const std::size_t wa = a.count();
        const std::size_t wb = b.count();
        if (wa != wb) return wa < wb;
        return degrevlex_order(Word::from_bits(a), Word::from_bits(b)) ==
               std::strong_ordering::less;
    });
    IndependenceSieve sieve;
    std::size_t total = 0;
    std::size_t taken = 0;
    for (const BitVec& c : nonzero) {
        if (!sieve.accept(c)) continue;
        total += c.count();
        if (++taken == code.dimension()) break;
    }
    return total;
}

std::vector<Graph::Edge> edges_in_cycle(const Graph& g, const BitVec& cycle) {
    if (cycle.size() != g.edge_count())
        throw std::invalid_argument("edges_in_cycle: vector length mismatch");
    std::vector<Graph::Edge> out;
    cycle.for_each_set([&](std::size_t j) { out.push_back(g.edges()[j]); });
    return out;
}

}  // namespace codegb
