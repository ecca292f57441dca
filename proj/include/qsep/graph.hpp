#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsep/errors.hpp"

namespace qsep {

// Simple undirected graph as a dense 0/1 adjacency matrix. Vertices are
// 0-indexed internally; file formats use the 1-indexed DIMACS convention.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    // Self-loops are rejected; adding an existing edge is a no-op.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }

    // Adjacency as a bitmask over vertices; valid for n <= 64.
    std::uint64_t neighbor_mask(int v) const;

    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lexicographic

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int idx(int u, int v) const { return u * n_ + v; }
    void check_vertex(int v) const;

    int n_;
    int edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

struct CliqueInstance {
    Graph graph;
    int c;  // clique threshold, 1 <= c <= n

    CliqueInstance(Graph g, int c_);
};

// Accepts DIMACS edge format ("p edge n m" / "e u v" lines) or a JSON
// document {"n": int, "edges": [[u,v],...]}; both 1-indexed.
Graph parse_graph(const std::string& text);

struct MaxCliqueResult {
    int omega = 0;
    std::vector<int> witness;  // vertices of one maximum clique
};

// Exact clique number by subset enumeration. Refuses n > 20.
MaxCliqueResult max_clique_bruteforce(const Graph& g);

// YES iff the clique number is at least inst.c.
bool solve_clique(const CliqueInstance& inst);

// G(n, p) with a caller-owned seed; test and corpus helper.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace qsep
