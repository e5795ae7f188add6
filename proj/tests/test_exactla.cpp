#include <doctest.h>

#include "oracles.hpp"
#include "otkit/errors.hpp"
#include "otkit/matrix.hpp"

using namespace otk;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("rref of the identity is the identity") {
    const RationalMatrix id = RationalMatrix::identity(3);
    const RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank == 3);
}

TEST_CASE("rref of a zero matrix") {
    const RationalMatrix zero(2, 3);
    const RrefResult r = rref(zero);
    CHECK(r.matrix == zero);
    CHECK(r.pivots.empty());
    CHECK(r.rank == 0);
}

TEST_CASE("rank agrees with fraction-free elimination on random matrices") {
    oracle::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const RationalMatrix m = rng.matrix(4, 6);
        CHECK(rank_of(m) == oracle::bareiss_rank(m));
    }
}

TEST_CASE("rref is idempotent") {
    oracle::Rng rng(4711);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMatrix m = rng.matrix(
            static_cast<std::size_t>(rng.integer(1, 5)),
            static_cast<std::size_t>(rng.integer(1, 6)));
        const RrefResult once = rref(m);
        const RrefResult twice = rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("rank equals rank of the transpose") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const RationalMatrix m = rng.matrix(
            static_cast<std::size_t>(rng.integer(1, 6)),
            static_cast<std::size_t>(rng.integer(1, 6)));
        CHECK(rank_of(m) == rank_of(m.transposed()));
    }
}

TEST_CASE("kernel basis of a 2x3 example") {
    const RationalMatrix m = from_ints({{1, 0, 1}, {0, 1, 1}});
    const SubspaceBasis k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    // RREF scaling: leading entry 1.
    const QVector v = k.vector(0);
    CHECK(v == QVector{1, 1, -1});
    CHECK(is_zero_vector(m.apply(v)));
}

TEST_CASE("kernel of the identity is trivial") {
    CHECK(kernel_basis(RationalMatrix::identity(4)).dim() == 0);
}

TEST_CASE("kernel vectors multiply back to zero and have full count") {
    oracle::Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMatrix m = rng.matrix(3, 7);
        const SubspaceBasis k = kernel_basis(m);
        CHECK(k.dim() == 7 - rank_of(m));
        for (std::size_t i = 0; i < k.dim(); ++i)
            CHECK(is_zero_vector(m.apply(k.vector(i))));
    }
}

TEST_CASE("span membership: basis vectors and zero") {
    const SubspaceBasis b = SubspaceBasis::from_vectors(
        4, {{1, 0, 2, 0}, {0, 1, -1, 3}});
    CHECK(b.contains(QVector{1, 0, 2, 0}));
    CHECK(b.contains(QVector{0, 0, 0, 0}));
    CHECK(b.contains(QVector{1, 1, 1, 3}));
    CHECK_FALSE(b.contains(QVector{0, 0, 1, 0}));
}

TEST_CASE("span membership agrees with a rank oracle on random data") {
    oracle::Rng rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t ambient = static_cast<std::size_t>(rng.integer(2, 7));
        const std::size_t count = static_cast<std::size_t>(rng.integer(1, 4));
        std::vector<QVector> vectors;
        for (std::size_t i = 0; i < count; ++i) {
            QVector v(ambient);
            for (auto& x : v) x = rng.rational(4);
            vectors.push_back(std::move(v));
        }
        const SubspaceBasis b = SubspaceBasis::from_vectors(ambient, vectors);

        QVector candidate(ambient);
        if (trial % 2 == 0) {
            // combination of the generators
            for (const QVector& v : vectors) {
                const Rational c = rng.rational(4);
                for (std::size_t j = 0; j < ambient; ++j)
                    candidate[j] += c * v[j];
            }
        } else {
            for (auto& x : candidate) x = rng.rational(4);
        }

        std::vector<QVector> stacked = vectors;
        stacked.push_back(candidate);
        const bool inside =
            oracle::bareiss_rank(RationalMatrix::from_rows(stacked)) ==
            oracle::bareiss_rank(RationalMatrix::from_rows(vectors));
        CHECK(b.contains(candidate) == inside);
    }
}

TEST_CASE("rational round trip") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

}  // TEST_SUITE
