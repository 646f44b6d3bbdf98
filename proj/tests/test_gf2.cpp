#include <doctest.h>

#include <random>

#include "z2sys/gf2.hpp"

using namespace z2sys;

TEST_SUITE("gf2") {

TEST_CASE("bitvector basics") {
    BitVector v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.get(64));
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK(v.any());

    BitVector w(130);
    w.set(0);
    CHECK(v.dot(w));
    w.set(129);
    CHECK_FALSE(v.dot(w));
}

TEST_CASE("support order ties") {
    BitVector a(10), b(10);
    a.set(0);
    a.set(5);
    b.set(1);
    b.set(2);
    CHECK(BitVector::support_less(a, b));
    CHECK_FALSE(BitVector::support_less(b, a));
    CHECK_FALSE(BitVector::support_less(a, a));
}

TEST_CASE("rank and nullspace") {
    // 3x3 cyclic incidence: rank 2, nullity 1
    BinaryMatrix m(3, 3);
    m.set(0, 0); m.set(0, 1);
    m.set(1, 1); m.set(1, 2);
    m.set(2, 2); m.set(2, 0);
    CHECK(m.rank() == 2);
    const auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].count() == 3);
    CHECK(m.apply(ns[0]).none());
}

TEST_CASE("solve finds verified solutions") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
        BinaryMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() & 1) m.set(i, j);
        // consistent rhs by construction
        BitVector x(cols);
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1) x.set(j);
        const BitVector y = m.apply(x);
        const auto sol = m.solve(y);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == y);
    }
}

TEST_CASE("solve reports inconsistency") {
    BinaryMatrix m(2, 1);
    m.set(0, 0);
    // second row zero, rhs one: inconsistent
    BitVector y(2);
    y.set(1);
    CHECK_FALSE(m.solve(y).has_value());
}

TEST_CASE("linear solver expresses members of the span") {
    std::mt19937_64 rng(11);
    const std::size_t width = 20;
    std::vector<BitVector> gens;
    for (int i = 0; i < 8; ++i) {
        BitVector g(width);
        for (std::size_t j = 0; j < width; ++j)
            if (rng() & 1) g.set(j);
        gens.push_back(g);
    }
    LinearSolver solver(gens, width);
    for (int trial = 0; trial < 30; ++trial) {
        BitVector v(width);
        BitVector expect(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (rng() & 1) {
                v ^= gens[i];
                expect.set(i);
            }
        const auto coeffs = solver.express(v);
        REQUIRE(coeffs.has_value());
        BitVector rebuilt(width);
        for (std::size_t i : coeffs->support()) rebuilt ^= gens[i];
        CHECK(rebuilt == v);
    }
}

TEST_CASE("independent rows give a basis") {
    BinaryMatrix m(4, 3);
    m.set(0, 0);
    m.set(1, 0);  // duplicate of row 0
    m.set(2, 1);
    m.row(3) = m.row(0) ^ m.row(2);  // dependent
    const auto rows = m.independent_rows();
    CHECK(rows == std::vector<std::size_t>{0, 2});
}

TEST_CASE("transpose and multiply") {
    BinaryMatrix a(2, 3), b(3, 2);
    a.set(0, 0); a.set(0, 2); a.set(1, 1);
    b.set(0, 1); b.set(2, 1); b.set(1, 0);
    const auto p = a.multiplied(b);
    CHECK(p.get(0, 1) == false);  // 1*1 + 0*0 + 1*1 = 0
    CHECK(p.get(1, 0) == true);
    const auto at = a.transposed();
    CHECK(at.rows() == 3);
    CHECK(at.get(2, 0));
}

} // TEST_SUITE
