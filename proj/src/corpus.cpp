#include "qsep/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace qsep {

namespace {

std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    return slots;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& slots, std::uint32_t mask) {
    Graph g(n);
    for (std::size_t e = 0; e < slots.size(); ++e)
        if (mask >> e & 1u) g.add_edge(slots[e].first, slots[e].second);
    return g;
}

}  // namespace

std::vector<Graph> canonical_graphs(int n) {
    if (n < 1 || n > 7) throw ValidationError("canonical corpus supported for 1 <= n <= 7");
    const auto slots = edge_slots(n);
    const int num_slots = static_cast<int>(slots.size());

    // Edge-slot image of every vertex permutation.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> slot_maps;
    do {
        std::vector<int> map(num_slots);
        for (int e = 0; e < num_slots; ++e) {
            int u = perm[slots[e].first], v = perm[slots[e].second];
            if (u > v) std::swap(u, v);
            map[e] = static_cast<int>(std::lower_bound(slots.begin(), slots.end(),
                                                       std::make_pair(u, v)) -
                                      slots.begin());
        }
        slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(std::size_t{1} << num_slots, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << num_slots); ++mask) {
        if (seen[mask]) continue;
        for (const auto& map : slot_maps) {
            std::uint32_t image = 0;
            for (int e = 0; e < num_slots; ++e)
                if (mask >> e & 1u) image |= std::uint32_t{1} << map[e];
            seen[image] = true;
        }
        out.push_back(graph_from_mask(n, slots, mask));
    }
    return out;
}

std::vector<Graph> canonical_graphs_up_to(int n_max) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto batch = canonical_graphs(n);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

std::vector<Graph> random_graph_corpus(int count, int n_min, int n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::uniform_real_distribution<double> pick_p(0.2, 0.8);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_graph(pick_n(rng), pick_p(rng), rng()));
    return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mx;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mx);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned k = std::min<unsigned>(jobs, std::thread::hardware_concurrency() * 2 + 1);
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qsep
