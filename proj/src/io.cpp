#include "qsep/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qsep {

using nlohmann::json;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_real(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw ParseError("cannot parse real value '" + s + "'");
        return v;
    }
    throw ParseError("expected a real value (number or decimal string)");
}

json rational_to_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("expected rational {\"num\",\"den\"}");
    return Rational(j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>());
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j2 = 0; j2 < m.cols(); ++j2)
            entries.push_back({format_real(m(i, j2).real()), format_real(m(i, j2).imag())});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("matrix entry count mismatch");
    Matrix m(rows, cols);
    int k = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c, ++k)
            m(r, c) = std::complex<double>(parse_real(entries[k][0]), parse_real(entries[k][1]));
    return m;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return json{{"schema_version", kSchemaVersion}, {"n", g.n()}, {"edges", edges}};
}

json bloch_to_json(const BlochVector& v) {
    json coords = json::array();
    for (Eigen::Index i = 0; i < v.coords.size(); ++i)
        coords.push_back(format_real(v.coords(i)));
    return json{{"schema_version", kSchemaVersion}, {"dim", v.dim}, {"coords", coords}};
}

BlochVector bloch_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    const auto& coords = j.at("coords");
    RealVector x(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) x(i) = parse_real(coords[i]);
    return BlochVector(dim, std::move(x));
}

json rsdf_to_json(const RsdfInstance& inst) {
    json mats = json::array();
    for (const auto& b : inst.B) {
        json entries = json::array();
        for (int r = 0; r < inst.l; ++r)
            for (int c = 0; c < inst.l; ++c) entries.push_back(format_real(b(r, c)));
        mats.push_back(std::move(entries));
    }
    json doc{{"schema_version", kSchemaVersion},
             {"type", "rsdf"},
             {"k", inst.k},
             {"l", inst.l},
             {"zeta", rational_to_json(inst.zeta)},
             {"eta", rational_to_json(inst.eta)},
             {"sum_norm_sq", rational_to_json(inst.sum_norm_sq)},
             {"B", mats}};
    if (inst.source_graph) doc["source_graph"] = graph_to_json(*inst.source_graph);
    if (inst.source_c) doc["source_c"] = *inst.source_c;
    return doc;
}

RsdfInstance rsdf_from_json(const json& j) {
    if (j.value("type", "") != "rsdf") throw ParseError("not an rsdf document");
    RsdfInstance inst;
    inst.k = j.at("k").get<int>();
    inst.l = j.at("l").get<int>();
    inst.zeta = rational_from_json(j.at("zeta"));
    inst.eta = rational_from_json(j.at("eta"));
    inst.sum_norm_sq = rational_from_json(j.at("sum_norm_sq"));
    for (const auto& mat : j.at("B")) {
        if (static_cast<int>(mat.size()) != inst.l * inst.l)
            throw ParseError("rsdf matrix entry count mismatch");
        RealMatrix b(inst.l, inst.l);
        int k = 0;
        for (int r = 0; r < inst.l; ++r)
            for (int c = 0; c < inst.l; ++c, ++k) b(r, c) = parse_real(mat[k]);
        inst.B.push_back(std::move(b));
    }
    if (j.contains("source_graph")) {
        const auto& gj = j["source_graph"];
        Graph g(gj.at("n").get<int>());
        for (const auto& e : gj.at("edges"))
            g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
        inst.source_graph = std::move(g);
    }
    if (j.contains("source_c")) inst.source_c = j["source_c"].get<int>();
    inst.validate();
    return inst;
}

json wopt_to_json(const WoptInstance& w) {
    json chat = json::array();
    for (Eigen::Index i = 0; i < w.c_hat.size(); ++i)
        chat.push_back(format_real(w.c_hat(i)));
    json doc{{"schema_version", kSchemaVersion},
             {"type", "wopt"},
             {"M", w.M},
             {"N", w.N},
             {"m", w.m},
             {"gamma", format_real(w.gamma)},
             {"epsilon", format_real(w.epsilon)},
             {"delta", format_real(w.delta)},
             {"zeta", rational_to_json(w.zeta)},
             {"eta", rational_to_json(w.eta)},
             {"chat_norm_sq", rational_to_json(w.chat_norm_sq)},
             {"delta_sq", rational_to_json(w.delta_sq)},
             {"c_hat", chat}};
    if (w.c_matrix) doc["c_matrix"] = matrix_to_json(w.c_matrix->mat);
    return doc;
}

WoptInstance wopt_from_json(const json& j) {
    if (j.value("type", "") != "wopt") throw ParseError("not a wopt document");
    WoptInstance w;
    w.M = j.at("M").get<int>();
    w.N = j.at("N").get<int>();
    w.m = j.at("m").get<long>();
    w.gamma = parse_real(j.at("gamma"));
    w.epsilon = parse_real(j.at("epsilon"));
    w.delta = parse_real(j.at("delta"));
    w.zeta = rational_from_json(j.at("zeta"));
    w.eta = rational_from_json(j.at("eta"));
    w.chat_norm_sq = rational_from_json(j.at("chat_norm_sq"));
    w.delta_sq = rational_from_json(j.at("delta_sq"));
    const auto& chat = j.at("c_hat");
    if (static_cast<long>(chat.size()) != w.m) throw ParseError("c_hat length mismatch");
    w.c_hat = RealVector(w.m);
    for (long i = 0; i < w.m; ++i) w.c_hat(i) = parse_real(chat[i]);
    const double norm = std::sqrt(w.chat_norm_sq.to_double());
    w.c = w.c_hat / norm;
    if (j.contains("c_matrix"))
        w.c_matrix = HermitianOperator(matrix_from_json(j["c_matrix"]));
    return w;
}

json wmem_params_to_json(const WmemParams& p) {
    return json{{"schema_version", kSchemaVersion},
                {"type", "wmem_params"},
                {"beta", format_real(p.beta)},
                {"epsilon", format_real(p.epsilon)},
                {"inner_radius", format_real(p.inner_radius)},
                {"outer_radius", format_real(p.outer_radius)},
                {"m", p.m}};
}

WmemParams wmem_params_from_json(const json& j) {
    if (j.value("type", "") != "wmem_params") throw ParseError("not a wmem_params document");
    WmemParams p;
    p.beta = parse_real(j.at("beta"));
    p.epsilon = parse_real(j.at("epsilon"));
    p.inner_radius = parse_real(j.at("inner_radius"));
    p.outer_radius = parse_real(j.at("outer_radius"));
    p.m = j.at("m").get<long>();
    return p;
}

json kraus_to_json(const KrausSet& k) {
    json ops = json::array();
    for (const auto& op : k.operators) ops.push_back(matrix_to_json(op));
    return json{{"schema_version", kSchemaVersion},
                {"type", "channel"},
                {"M", k.M},
                {"N", k.N},
                {"kraus", ops}};
}

ChoiOperator choi_from_channel_json(const json& j) {
    const int M = j.at("M").get<int>();
    const int N = j.at("N").get<int>();
    if (j.contains("kraus")) {
        KrausSet k;
        k.M = M;
        k.N = N;
        for (const auto& op : j["kraus"]) {
            Matrix m = matrix_from_json(op);
            if (m.rows() != M || m.cols() != N)
                throw ParseError("Kraus operator must be M x N");
            k.operators.push_back(std::move(m));
        }
        return choi_from_kraus(k);
    }
    if (j.contains("choi")) {
        Matrix m = matrix_from_json(j["choi"]);
        if (m.rows() != M * N) throw ParseError("Choi matrix must be MN x MN");
        ChoiOperator out{M, N, HermitianOperator((m + Matrix(m.adjoint())) / 2.0)};
        out.min_eigenvalue = min_eigenvalue(out.J.mat);
        out.cp = out.min_eigenvalue >= -1e-9;
        out.tp_deviation =
            (partial_trace_a(out.J.mat, M, N) - Matrix::Identity(N, N) / double(N))
                .cwiseAbs()
                .maxCoeff();
        out.tp = out.tp_deviation <= 1e-10;
        return out;
    }
    throw ParseError("channel document needs \"kraus\" or \"choi\"");
}

json report_to_json(const RunReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"measured", format_real(c.measured)},
                              {"tolerance", format_real(c.tolerance)},
                              {"note", c.note}});
    return json{{"schema_version", kSchemaVersion},
                {"command", r.command},
                {"inputs", r.inputs},
                {"outputs", r.outputs},
                {"checks", checks},
                {"all_passed", r.all_passed()},
                {"wall_time_s", r.wall_time_s}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

}  // namespace qsep
