#include <doctest.h>

#include <filesystem>

#include "qsep/commands.hpp"
#include "qsep/io.hpp"

using namespace qsep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qsep_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("reduce answers degenerate instances without emitting files") {
    TempDir tmp;
    const std::string k3 = (tmp.path / "k3.dimacs").string();
    write_file(k3, "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");

    SUBCASE("c = 1 is a direct YES") {
        const RunReport r = cmd_reduce({k3, 1, std::nullopt, tmp.path.string()});
        CHECK(r.all_passed());
        CHECK(r.outputs.empty());
        REQUIRE(r.checks.size() == 1);
        CHECK(r.checks[0].name == "answered_without_reduction");
        CHECK(r.checks[0].measured == 1.0);
    }

    SUBCASE("edgeless graph is a direct NO") {
        const std::string empty = (tmp.path / "empty.dimacs").string();
        write_file(empty, "p edge 3 0\n");
        const RunReport r = cmd_reduce({empty, 2, std::nullopt, tmp.path.string()});
        CHECK(r.all_passed());
        CHECK(r.outputs.empty());
        CHECK(r.checks[0].measured == 0.0);
    }

    SUBCASE("c out of range is a usage error") {
        CHECK_THROWS_AS(cmd_reduce({k3, 4, std::nullopt, tmp.path.string()}),
                        ValidationError);
    }
}

TEST_CASE("reduce emits the three instance files and they recheck") {
    TempDir tmp;
    const std::string k3 = (tmp.path / "k3.json").string();
    write_file(k3, R"({"n": 3, "edges": [[1,2],[2,3],[1,3]]})");
    const RunReport r = cmd_reduce({k3, 3, std::nullopt, tmp.path.string()});
    CHECK(r.all_passed());
    REQUIRE(r.outputs.size() == 3);
    for (const auto& out : r.outputs) CHECK(fs::exists(out));

    const RunReport recheck = verify_instance_files(r.outputs);
    CHECK(recheck.all_passed());

    // Identical check values on a second pass.
    const RunReport again = verify_instance_files(r.outputs);
    REQUIRE(recheck.checks.size() == again.checks.size());
    for (std::size_t i = 0; i < recheck.checks.size(); ++i)
        CHECK(recheck.checks[i].measured == again.checks[i].measured);
}

TEST_CASE("oracle command reads both state encodings") {
    TempDir tmp;
    const std::string bloch = (tmp.path / "origin.json").string();
    write_file(bloch, bloch_to_json(BlochVector(4, RealVector::Zero(15))).dump());
    const OracleResult from_bloch = cmd_oracle({bloch, 2, 2, 0.05});
    CHECK(from_bloch.yes);
    CHECK(from_bloch.is_state);
    CHECK(from_bloch.min_pt_eigenvalue == doctest::Approx(0.25));

    Matrix proj = Matrix::Zero(4, 4);
    proj(0, 0) = proj(0, 3) = proj(3, 0) = proj(3, 3) = 0.5;
    const std::string bell = (tmp.path / "bell.json").string();
    write_file(bell, matrix_to_json(proj).dump());
    const OracleResult from_state = cmd_oracle({bell, 2, 2, 0.01});
    CHECK_FALSE(from_state.yes);
    CHECK(from_state.min_pt_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("eb-check verdicts") {
    TempDir tmp;
    KrausSet identity;
    identity.M = identity.N = 2;
    identity.operators = {Matrix::Identity(2, 2)};
    const std::string chan = (tmp.path / "identity.json").string();
    write_file(chan, kraus_to_json(identity).dump());
    const EbCheckResult res = cmd_eb_check(chan);
    CHECK(res.cp);
    CHECK(res.tp);
    CHECK(res.kappa_b == doctest::Approx(1.0));
    CHECK(res.eb_verdict == "no");  // identity keeps entanglement intact

    KrausSet depolarize;
    depolarize.M = depolarize.N = 2;
    const double half = 0.5;
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    z << 1, 0, 0, -1;
    depolarize.operators = {half * Matrix::Identity(2, 2), half * x, half * y, half * z};
    const std::string dep = (tmp.path / "dep.json").string();
    write_file(dep, kraus_to_json(depolarize).dump());
    const EbCheckResult res2 = cmd_eb_check(dep);
    CHECK(res2.cp);
    CHECK(res2.tp);
    CHECK(res2.eb_verdict == "yes");  // Choi state is maximally mixed
}

TEST_CASE("exponent report") {
    const ExponentReport r = cmd_exponents();
    CHECK(std::abs(r.n_drop - 73.0) <= 1.0);
    CHECK(std::abs(r.m_slope + 16.0) <= 0.5);
    CHECK(std::abs(r.n_slope + 20.5) <= 0.5);
}
