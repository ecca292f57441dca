#include "qsep/graph.hpp"

#include <bit>
#include <random>
#include <sstream>

#include <json.hpp>

namespace qsep {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw ValidationError("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ValidationError("vertex " + std::to_string(v + 1) + " out of range 1.." +
                              std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u + 1));
    if (adj_[idx(u, v)]) return;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    ++edge_count_;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    std::uint64_t m = 0;
    for (int w = 0; w < n_; ++w)
        if (adj_[idx(v, w)]) m |= std::uint64_t{1} << w;
    return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[idx(u, v)]) out.emplace_back(u, v);
    return out;
}

CliqueInstance::CliqueInstance(Graph g, int c_) : graph(std::move(g)), c(c_) {
    if (c < 1 || c > graph.n())
        throw ValidationError("clique threshold c must satisfy 1 <= c <= n");
}

namespace {

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long m = 0;
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 1)
                throw ParseError("expected 'p edge <n> <m>'", lineno);
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("expected 'e <u> <v>'", lineno);
            if (n < 0) throw ParseError("edge before problem line", lineno);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range", lineno);
            pending.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unrecognized line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    Graph g(n);
    for (auto [u, v] : pending) g.add_edge(u, v);
    return g;
}

Graph parse_json_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("graph document needs integer field \"n\"");
    Graph g(doc["n"].get<int>());
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a [u, v] pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > g.n() || v < 1 || v > g.n())
            throw ParseError("edge endpoint out of range");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' ? parse_json_graph(text) : parse_dimacs(text);
    }
    throw ParseError("empty graph document");
}

MaxCliqueResult max_clique_bruteforce(const Graph& g) {
    const int n = g.n();
    if (n > 20)
        throw ValidationError("exhaustive clique search refused for n > 20 (got n=" +
                              std::to_string(n) + ")");
    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_mask(v);

    MaxCliqueResult best;
    best.omega = 1;
    best.witness = {0};
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < limit; ++s) {
        int size = std::popcount(s);
        if (size <= best.omega) continue;
        bool clique = true;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((nbr[v] & s) != (s & ~(std::uint64_t{1} << v))) {
                clique = false;
                break;
            }
        }
        if (clique) {
            best.omega = size;
            best.witness.clear();
            for (std::uint64_t rest = s; rest; rest &= rest - 1)
                best.witness.push_back(std::countr_zero(rest));
        }
    }
    return best;
}

bool solve_clique(const CliqueInstance& inst) {
    return max_clique_bruteforce(inst.graph).omega >= inst.c;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace qsep
