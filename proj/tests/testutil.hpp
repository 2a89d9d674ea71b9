#pragma once

// Shared fixtures and generators for the test binaries.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/cycles.hpp"
#include "codegb/text_io.hpp"

namespace testutil {

inline codegb::BitVec bits(std::string_view s) { return codegb::parse_bit_string(s); }

inline codegb::BinaryMatrix matrix_rows(std::vector<std::string> rows) {
    std::vector<codegb::BitVec> parsed;
    for (const std::string& r : rows) parsed.push_back(bits(r));
    const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
    return codegb::BinaryMatrix::from_rows(std::move(parsed), cols);
}

inline codegb::BinaryMatrix example1_generator() {
    return matrix_rows({"110110", "011001", "101111"});
}

inline codegb::BinaryMatrix toy_generator() { return matrix_rows({"101", "011"}); }

inline codegb::Graph house_graph() {
    return codegb::Graph(5, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
}

/// Random code of length 2..max_n with dimension at least 1.
inline codegb::BinaryCode random_code(std::mt19937_64& rng, std::size_t max_n) {
    for (;;) {
        const std::size_t n = 2 + rng() % (max_n - 1);
        const std::size_t row_count = 1 + rng() % n;
        std::vector<codegb::BitVec> rows;
        for (std::size_t r = 0; r < row_count; ++r) {
            codegb::BitVec row(n);
            for (std::size_t i = 0; i < n; ++i)
                if (rng() & 1u) row.set(i, true);
            rows.push_back(std::move(row));
        }
        codegb::BinaryCode code = codegb::BinaryCode::from_generator(
            codegb::BinaryMatrix::from_rows(std::move(rows), n));
        if (code.dimension() >= 1) return code;
    }
}

/// Random connected simple graph: a shuffled spanning tree plus extra
/// edges, capped at max_edges.
inline codegb::Graph random_connected_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                            std::size_t max_edges) {
    const std::size_t v = 3 + rng() % (max_vertices - 2);
    std::vector<std::size_t> order(v);
    for (std::size_t i = 0; i < v; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);

    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t i = 1; i < v; ++i) {
        const std::size_t a = order[rng() % i];
        const std::size_t b = order[i];
        edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    const std::size_t extra = rng() % (v + 2);
    for (std::size_t e = 0; e < extra && edge_set.size() < max_edges; ++e) {
        const std::size_t a = 1 + rng() % v;
        const std::size_t b = 1 + rng() % v;
        if (a != b) edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<codegb::Graph::Edge> edges(edge_set.begin(), edge_set.end());
    std::shuffle(edges.begin(), edges.end(), rng);
    return codegb::Graph(v, std::move(edges));
}

}  // namespace testutil
