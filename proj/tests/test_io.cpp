#include <doctest.h>

#include "qsep/io.hpp"
#include "qsep/sampling.hpp"

using namespace qsep;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

}  // namespace

TEST_CASE("reals survive the decimal-string roundtrip bit-exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1.378180973993350156e-14, -2.5e300, 0.0}) {
        const nlohmann::json j = format_real(v);
        CHECK(parse_real(j) == v);
    }
}

TEST_CASE("rational json") {
    const Rational r(7, 6);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK_THROWS_AS(rational_from_json(nlohmann::json{{"num", 1}}), ParseError);
}

TEST_CASE("matrix json roundtrip") {
    std::mt19937_64 rng(2);
    const Matrix m = random_density_matrix(rng, 3);
    const Matrix back = matrix_from_json(matrix_to_json(m));
    CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("graph json carries the schema version") {
    const nlohmann::json j = graph_to_json(triangle());
    CHECK(j["schema_version"] == kSchemaVersion);
    const Graph back = parse_graph(j.dump());
    CHECK(back == triangle());
}

TEST_CASE("instance documents roundtrip") {
    const RsdfInstance inst = clique_to_rsdf({triangle(), 3});
    const RsdfInstance inst2 = rsdf_from_json(rsdf_to_json(inst));
    CHECK(inst2.k == inst.k);
    CHECK(inst2.zeta == inst.zeta);
    CHECK(inst2.eta == inst.eta);
    CHECK(inst2.source_c.value() == 3);
    for (int i = 0; i < inst.k; ++i)
        CHECK((inst2.B[i] - inst.B[i]).cwiseAbs().maxCoeff() == 0.0);

    const WoptInstance w = rsdf_to_wopt(inst);
    const WoptInstance w2 = wopt_from_json(wopt_to_json(w));
    CHECK(w2.M == w.M);
    CHECK(w2.m == w.m);
    CHECK(w2.gamma == w.gamma);
    CHECK(w2.epsilon == w.epsilon);
    CHECK((w2.c_hat - w.c_hat).cwiseAbs().maxCoeff() == 0.0);
    CHECK((w2.c_matrix->mat - w.c_matrix->mat).cwiseAbs().maxCoeff() == 0.0);

    const WmemParams p = wopt_to_wmem_params(w);
    const WmemParams p2 = wmem_params_from_json(wmem_params_to_json(p));
    CHECK(p2.beta == p.beta);
    CHECK(p2.m == p.m);
}

TEST_CASE("bloch vector json") {
    BlochVector v(2, (RealVector(3) << 0.25, -1.0 / 3.0, 1e-17).finished());
    const BlochVector back = bloch_from_json(bloch_to_json(v));
    CHECK(back.dim == 2);
    CHECK((back.coords - v.coords).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("channel documents accept kraus and choi forms") {
    std::mt19937_64 rng(6);
    const KrausSet k = random_tp_kraus(rng, 2, 2, 2);
    const ChoiOperator from_kraus = choi_from_channel_json(kraus_to_json(k));
    CHECK(from_kraus.cp);
    CHECK(from_kraus.tp);

    nlohmann::json choi_doc{{"schema_version", kSchemaVersion},
                            {"type", "channel"},
                            {"M", 2},
                            {"N", 2},
                            {"choi", matrix_to_json(from_kraus.J.mat)}};
    const ChoiOperator from_choi = choi_from_channel_json(choi_doc);
    CHECK((from_choi.J.mat - from_kraus.J.mat).cwiseAbs().maxCoeff() <= 1e-15);

    CHECK_THROWS_AS(choi_from_channel_json(nlohmann::json{{"M", 2}, {"N", 2}}),
                    ParseError);
}

TEST_CASE("report json shape") {
    RunReport r;
    r.command = "verify";
    r.checks.push_back({"demo", true, 0.5, 1.0, "note"});
    const nlohmann::json j = report_to_json(r);
    CHECK(j["all_passed"] == true);
    CHECK(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "demo");
    CHECK(j.contains("schema_version"));
}
