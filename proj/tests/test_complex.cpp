#include <doctest.h>

#include <filesystem>
#include <random>

#include "testutil.hpp"
#include "z2sys/json_io.hpp"
#include "z2sys/subdivision.hpp"

using namespace z2sys;

TEST_SUITE("complex_core") {

TEST_CASE("triangle boundary builds with closure") {
    const auto M = SimplicialComplex::build({{0, 1}, {1, 2}, {2, 0}}, 1);
    CHECK(M.count(0) == 3);
    CHECK(M.count(1) == 3);
    CHECK(M.volume() == 3);
    CHECK(M.pure());
}

TEST_CASE("single triangle closes to faces") {
    const auto M = SimplicialComplex::build({{0, 1, 2}}, 2);
    CHECK(M.count(0) == 3);
    CHECK(M.count(1) == 3);
    CHECK(M.count(2) == 1);
}

TEST_CASE("listed faces of listed simplices are dropped") {
    const auto M = SimplicialComplex::build({{0, 1, 2}, {0, 1}}, 2);
    CHECK(M.count(2) == 1);
    CHECK(M.count(1) == 3);
    bool logged = false;
    for (const auto& line : M.build_log())
        if (line.find("dropped") != std::string::npos) logged = true;
    CHECK(logged);
}

TEST_CASE("empty input is an error") {
    CHECK_THROWS_AS(SimplicialComplex::build({}, 1), std::invalid_argument);
}

TEST_CASE("non-pure input builds with a warning flag") {
    const auto M = SimplicialComplex::build({{0, 1, 2}, {3, 4}}, 2);
    CHECK_FALSE(M.pure());
    CHECK(M.count(2) == 1);
    CHECK(M.count(1) == 4);
}

TEST_CASE("vertex ids densify order-preservingly") {
    const auto M = SimplicialComplex::build({{10, 20}, {20, 42}}, 1);
    CHECK(M.count(0) == 3);
    CHECK(M.contains(Simplex{{0, 1}}));
    CHECK(M.contains(Simplex{{1, 2}}));
}

TEST_CASE("seven-vertex torus face counts") {
    const auto M = testutil::csaszar_torus();
    CHECK(M.count(0) == 7);
    CHECK(M.count(1) == 21);
    CHECK(M.count(2) == 14);
    // Euler characteristic zero
    CHECK(M.count(0) - M.count(1) + M.count(2) == 0);
    CHECK(is_closed_pseudomanifold(M));
}

TEST_CASE("boundary matrix of the triangle boundary") {
    const auto M = SimplicialComplex::build({{0, 1}, {1, 2}, {2, 0}}, 1);
    const auto B = boundary_matrix(M, 1);
    CHECK(B.rows() == 3);
    CHECK(B.cols() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        std::size_t colw = 0;
        for (std::size_t i = 0; i < 3; ++i) colw += B.get(i, j) ? 1 : 0;
        CHECK(colw == 2);
    }
    CHECK(B.rank() == 2);
}

TEST_CASE("single triangle boundary column") {
    const auto M = SimplicialComplex::build({{0, 1, 2}}, 2);
    const auto B = boundary_matrix(M, 2);
    CHECK(B.rows() == 3);
    CHECK(B.cols() == 1);
    CHECK(B.row(0).get(0));
    CHECK(B.row(1).get(0));
    CHECK(B.row(2).get(0));
    CHECK_THROWS_AS(boundary_matrix(M, 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(M, 3), std::invalid_argument);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937_64 rng(3);
    const auto complexes = testutil::random_pure_2complexes(rng, 10);
    for (const auto& M : complexes) {
        for (int k = 2; k <= M.top_dim(); ++k) {
            const auto prod = boundary_matrix(M, k - 1).multiplied(boundary_matrix(M, k));
            CHECK(prod.is_zero());
        }
    }
    const auto T = testutil::csaszar_torus();
    CHECK(boundary_matrix(T, 1).multiplied(boundary_matrix(T, 2)).is_zero());
}

TEST_CASE("face-closure idempotence") {
    const auto M = testutil::csaszar_torus();
    const auto M2 = SimplicialComplex::build(M.maximal_vertex_lists(), M.top_dim());
    for (int d = 0; d <= M.top_dim(); ++d) CHECK(M.count(d) == M2.count(d));
}

TEST_CASE("pseudomanifold detection") {
    CHECK_FALSE(is_closed_pseudomanifold(SimplicialComplex::build({{0, 1, 2}}, 2)));
    // two disjoint circles: locally fine but dual graph disconnected
    const auto two = SimplicialComplex::build(
        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, 1);
    CHECK_FALSE(is_closed_pseudomanifold(two));
    // closed pseudomanifolds have an even coface count everywhere, so the top
    // chain is a cycle
    const auto T = testutil::csaszar_torus();
    Chain all(2, static_cast<std::size_t>(T.count(2)));
    for (int i = 0; i < T.count(2); ++i) all.bits.set(i);
    CHECK(is_cycle(T, all));
}

TEST_CASE("subdivision of an edge and a triangle") {
    const auto E = SimplicialComplex::build({{0, 1}}, 1);
    const auto sdE = barycentric_subdivision(E);
    CHECK(sdE.complex.count(0) == 3);
    CHECK(sdE.complex.count(1) == 2);

    const auto T = testutil::full_simplex(2);
    const auto sdT = barycentric_subdivision(T);
    CHECK(sdT.complex.count(0) == 7);
    CHECK(sdT.complex.count(2) == 6);
}

TEST_CASE("subdivision scales volume by (n+1)!") {
    const auto M = testutil::csaszar_torus();
    const auto sd = barycentric_subdivision(M);
    CHECK(sd.complex.volume() == 6 * M.volume());
    std::mt19937_64 rng(5);
    const auto complexes = testutil::random_pure_2complexes(rng, 3, 8);
    for (const auto& C : complexes)
        CHECK(barycentric_subdivision(C).complex.volume() == 6 * C.volume());
}

TEST_CASE("json round-trip is canonical") {
    const auto M = testutil::csaszar_torus();
    const std::string once = complex_to_json(M);
    const auto M2 = complex_from_json(once);
    CHECK(complex_to_json(M2) == once);
    for (int d = 0; d <= 2; ++d) CHECK(M2.count(d) == M.count(d));

    const auto tmp = std::filesystem::temp_directory_path() / "z2sys_roundtrip.json";
    save_complex(M, tmp.string());
    const auto M3 = load_complex(tmp.string());
    CHECK(complex_to_json(M3) == once);
    std::filesystem::remove(tmp);
}

TEST_CASE("subcomplex closure and maximality") {
    const auto M = testutil::csaszar_torus();
    SubComplex s(M);
    s.add(2, 0);
    CHECK_FALSE(s.is_closed());
    s.close();
    CHECK(s.is_closed());
    CHECK(s.count(1) == 3);
    CHECK(s.count(0) == 3);
    const auto tops = s.maximal_vertex_lists();
    REQUIRE(tops.size() == 1);
    CHECK(tops[0] == M.simplex(2, 0).vertices());
}

} // TEST_SUITE
