#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsep/graph.hpp"

namespace qsep {

// One representative per isomorphism class of simple graphs on exactly n
// vertices (n <= 7), by orbit enumeration over vertex permutations.
std::vector<Graph> canonical_graphs(int n);

// All classes for 1 <= n <= n_max, concatenated.
std::vector<Graph> canonical_graphs_up_to(int n_max);

// Seeded G(n, p) corpus with n drawn from [n_min, n_max] and p from {.2,...,.8}.
std::vector<Graph> random_graph_corpus(int count, int n_min, int n_max, std::uint64_t seed);

// Bounded worker pool over [0, count); fn must be safe to call concurrently
// on distinct indices. jobs <= 1 runs inline.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace qsep
