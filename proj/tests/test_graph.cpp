#include <doctest.h>

#include <functional>
#include <random>

#include "qsep/graph.hpp"

using namespace qsep;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

// All-subset re-verification, independent of the search's pruning.
bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool exists_clique_of_size(const Graph& g, int size) {
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == size) return is_clique(g, pick);
        for (int v = start; v < g.n(); ++v) {
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("dimacs parsing") {
    const Graph g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g == triangle());

    const Graph empty2 = parse_graph("p edge 2 0\n");
    CHECK(empty2.n() == 2);
    CHECK(empty2.edge_count() == 0);
}

TEST_CASE("dimacs rejects self-loops and malformed lines with a line number") {
    try {
        parse_graph("p edge 2 1\ne 1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("json graph documents") {
    const Graph g = parse_graph(R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})");
    CHECK(g == triangle());
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1,1]]})"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
    const Graph g = parse_graph("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("clique number on small graphs") {
    CHECK(max_clique_bruteforce(triangle()).omega == 3);

    Graph edgeless(5);
    CHECK(max_clique_bruteforce(edgeless).omega == 1);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(max_clique_bruteforce(path).omega == 2);
}

TEST_CASE("clique search refuses beyond its budget") {
    CHECK_THROWS_AS(max_clique_bruteforce(Graph(21)), ValidationError);
}

TEST_CASE("solve_clique thresholds") {
    CHECK(solve_clique({triangle(), 3}));
    CHECK(solve_clique({triangle(), 1}));
    CHECK_THROWS_AS(CliqueInstance(triangle(), 4), ValidationError);
    CHECK_THROWS_AS(CliqueInstance(triangle(), 0), ValidationError);

    Graph k3_plus_isolated(4);
    k3_plus_isolated.add_edge(0, 1);
    k3_plus_isolated.add_edge(1, 2);
    k3_plus_isolated.add_edge(0, 2);
    CHECK_FALSE(solve_clique({k3_plus_isolated, 4}));

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(solve_clique({path, 2}));
}

TEST_CASE("witness certification against exhaustive recheck") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(2 + seed % 7, 0.2 + 0.07 * (seed % 9), seed);
        const MaxCliqueResult res = max_clique_bruteforce(g);
        CHECK(static_cast<int>(res.witness.size()) == res.omega);
        CHECK(is_clique(g, res.witness));
        CHECK_FALSE(exists_clique_of_size(g, res.omega + 1));
        for (int c = 1; c <= g.n(); ++c)
            CHECK(solve_clique({g, c}) == (res.omega >= c));
    }
}
