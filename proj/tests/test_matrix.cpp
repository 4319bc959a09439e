#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spencer/matrix.hpp"
#include "spencer/rng.hpp"

using namespace spencer;

namespace {

ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar();
    return m;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
    ExactMatrix id = ExactMatrix::identity(3);
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 3);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    ExactMatrix z(2, 4);
    RrefResult rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.rank == 0);
}

TEST_CASE("rref of a rank-1 complex matrix") {
    // [[1, i], [i, -1]]: second row is i times the first.
    GaussianRational i = GaussianRational::i();
    ExactMatrix m(2, 2, {GaussianRational(1), i, i, GaussianRational(-1)});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced(0, 0) == GaussianRational(1));
    CHECK(r.reduced(0, 1) == i);
    CHECK(r.reduced(1, 0) == GaussianRational(0));
    CHECK(r.reduced(1, 1) == GaussianRational(0));
}

TEST_CASE("rref is idempotent and deterministic") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        ExactMatrix m = random_matrix(rng, static_cast<std::size_t>(rng.int_in(1, 6)),
                                      static_cast<std::size_t>(rng.int_in(1, 6)));
        RrefResult once = rref(m);
        RrefResult twice = rref(once.reduced);
        CHECK(twice.reduced == once.reduced);
        CHECK(twice.rank == once.rank);
        RrefResult again = rref(m);
        CHECK(again.reduced == once.reduced);
        CHECK(again.pivot_cols == once.pivot_cols);
    }
}

TEST_CASE("nullspace canonical basis examples") {
    CHECK(nullspace(ExactMatrix::identity(4)).empty());

    ExactMatrix z(1, 3);
    auto basis = nullspace(z);
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[i][j] == (i == j ? GaussianRational(1) : GaussianRational(0)));

    ExactMatrix m(1, 2, {GaussianRational(2), GaussianRational(-2)});
    auto b = nullspace(m);
    REQUIRE(b.size() == 1);
    CHECK(b[0][0] == GaussianRational(1));
    CHECK(b[0][1] == GaussianRational(1));
}

TEST_CASE("nullspace vectors satisfy m*v = 0 and rank-nullity") {
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        ExactMatrix m = random_matrix(rng, static_cast<std::size_t>(rng.int_in(1, 6)),
                                      static_cast<std::size_t>(rng.int_in(1, 6)));
        auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == m.cols());
        for (const Vec& v : basis) {
            Vec image = m * v;
            for (const auto& x : image) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("row space comparisons") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        ExactMatrix m = random_matrix(rng, 3, 4);
        // Scaling rows by nonzero scalars preserves the row space.
        ExactMatrix scaled = m;
        for (std::size_t i = 0; i < 3; ++i) {
            GaussianRational c = rng.scalar();
            if (c.is_zero()) c = GaussianRational(2);
            for (std::size_t j = 0; j < 4; ++j) scaled(i, j) = m(i, j) * c;
        }
        CHECK(same_row_space(m, scaled));
        CHECK(row_space_contains(m, scaled));
    }
    ExactMatrix a(1, 2, {GaussianRational(1), GaussianRational(0)});
    ExactMatrix b(1, 2, {GaussianRational(0), GaussianRational(1)});
    CHECK(!same_row_space(a, b));
    CHECK(!row_space_contains(a, b));
}

TEST_CASE("matrix product against hand values") {
    GaussianRational i = GaussianRational::i();
    ExactMatrix a(2, 2, {GaussianRational(1), i, GaussianRational(0), GaussianRational(1)});
    ExactMatrix b(2, 2, {GaussianRational(1), GaussianRational(0), i, GaussianRational(1)});
    ExactMatrix ab = a * b;
    CHECK(ab(0, 0) == GaussianRational(0));  // 1 + i*i
    CHECK(ab(0, 1) == i);
    CHECK(ab(1, 0) == i);
    CHECK(ab(1, 1) == GaussianRational(1));
}
