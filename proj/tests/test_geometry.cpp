#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gptlab/geometry.hpp"
#include "oracles.hpp"

#include <random>

using namespace gptlab;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Vec pt(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(q(x));
    return v;
}

const std::vector<Vec> square{pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})};

std::vector<Vec> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
    std::vector<Vec> pts(count, Vec(dim));
    for (auto& p : pts)
        for (auto& c : p) c = q(static_cast<long>(rng() % 17) - 8);
    return pts;
}

}  // namespace

TEST_CASE("affine_dimension") {
    CHECK(affine_dimension({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 2);
    CHECK(affine_dimension({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) == 2);
    CHECK(affine_dimension({pt({2, 3})}) == 0);
    CHECK_THROWS_AS(affine_dimension({}), std::invalid_argument);
    CHECK_THROWS_AS(affine_dimension({pt({1}), pt({1, 2})}), std::invalid_argument);
}

TEST_CASE("is_affinely_independent") {
    CHECK(is_affinely_independent({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
    CHECK(!is_affinely_independent({pt({0, 0}), pt({1, 0}), pt({2, 0})}));
    // Four square vertices in the plane: rank of the differences is 2 != 3.
    CHECK(oracles::bareiss_rank({pt({1, 0}), pt({1, 1}), pt({0, 1})}) == 2);
    CHECK(!is_affinely_independent(square));
}

TEST_CASE("rank agrees with the Bareiss oracle on random matrices") {
    std::mt19937_64 rng(7u);
    for (int trial = 0; trial < 40; ++trial) {
        auto rows = random_points(rng, 1 + rng() % 5, 1 + rng() % 5);
        CHECK(linalg::rank(rows) == oracles::bareiss_rank(rows));
    }
}

TEST_CASE("extreme_points") {
    auto with_center = square;
    with_center.push_back({q(1, 2), q(1, 2)});
    CHECK(extreme_points(with_center) == square);

    const std::vector<Vec> simplex{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    CHECK(extreme_points(simplex) == simplex);

    CHECK(extreme_points({Vec{q(0)}, Vec{q(1, 2)}, Vec{q(1)}}) ==
          std::vector<Vec>{Vec{q(0)}, Vec{q(1)}});
}

TEST_CASE("extreme_points is idempotent") {
    std::mt19937_64 rng(11u);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = random_points(rng, 4 + rng() % 5, 2 + rng() % 2);
        auto once = extreme_points(pts);
        CHECK(extreme_points(once) == once);
    }
}

TEST_CASE("convex_decompose reconstructs exactly") {
    auto center = convex_decompose({q(1, 2), q(1, 2)}, square);
    REQUIRE(center);
    Rational total = 0;
    Vec recon(2, q(0));
    for (auto& [idx, w] : *center) {
        CHECK(w > 0);
        total += w;
        recon = linalg::add(recon, linalg::scale(w, square[idx]));
    }
    CHECK(total == 1);
    CHECK(recon == Vec{q(1, 2), q(1, 2)});

    auto self = convex_decompose(square[2], square);
    REQUIRE(self);
    REQUIRE(self->size() == 1);
    CHECK((*self)[0].first == 2);
    CHECK((*self)[0].second == 1);

    CHECK(!convex_decompose(pt({2, 2}), square));
}

TEST_CASE("convex_decompose support is Caratheodory sized") {
    std::mt19937_64 rng(13u);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = random_points(rng, 5 + rng() % 4, 2);
        // random convex combination as target
        Vec target(2, q(0));
        Rational total = 0;
        std::vector<Rational> ws;
        for (std::size_t i = 0; i < pts.size(); ++i) ws.push_back(q(1 + rng() % 9));
        for (auto& w : ws) total += w;
        for (std::size_t i = 0; i < pts.size(); ++i)
            target = linalg::add(target, linalg::scale(ws[i] / total, pts[i]));
        auto d = convex_decompose(target, pts);
        REQUIRE(d);
        CHECK(d->size() <= 3);  // dim + 1
        Vec recon(2, q(0));
        Rational sum = 0;
        for (auto& [idx, w] : *d) {
            recon = linalg::add(recon, linalg::scale(w, pts[idx]));
            sum += w;
        }
        CHECK(sum == 1);
        CHECK(recon == target);
    }
}

TEST_CASE("unique decomposition iff affinely independent") {
    // On an affinely independent set, two decompositions of the same interior
    // point agree; on the square they can differ.
    const std::vector<Vec> tri{pt({0, 0}), pt({2, 0}), pt({0, 2})};
    Vec interior{q(1, 2), q(1, 2)};
    auto d1 = convex_decompose(interior, tri);
    std::vector<Vec> tri_rev{tri[2], tri[1], tri[0]};
    auto d2 = convex_decompose(interior, tri_rev);
    REQUIRE(d1);
    REQUIRE(d2);
    Vec w1(3, q(0)), w2(3, q(0));
    for (auto& [i, w] : *d1) w1[i] = w;
    for (auto& [i, w] : *d2) w2[2 - i] = w;
    CHECK(w1 == w2);
}

TEST_CASE("affine_extension basics") {
    const std::vector<Vec> simplex{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
    auto id = affine_extension(simplex, simplex);
    REQUIRE(id);
    CHECK(id->linear == linalg::identity(3));
    CHECK(id->translation == Vec(3, q(0)));

    auto flip = affine_extension({Vec{q(0)}, Vec{q(1)}}, {Vec{q(1)}, Vec{q(0)}});
    REQUIRE(flip);
    CHECK(flip->linear == Mat{{q(-1)}});
    CHECK(flip->translation == Vec{q(1)});

    CHECK(!affine_extension({pt({0, 0}), pt({1, 0}), pt({2, 0})},
                            {pt({0, 0}), pt({1, 0}), pt({0, 1})}));
}

TEST_CASE("affine_extension round trip and uniqueness") {
    std::mt19937_64 rng(17u);
    for (int trial = 0; trial < 20; ++trial) {
        auto sources = random_points(rng, 3, 2);
        if (!is_affinely_independent(sources)) continue;
        auto images = random_points(rng, 3, 2);
        auto map = affine_extension(sources, images);
        REQUIRE(map);
        for (std::size_t i = 0; i < sources.size(); ++i)
            CHECK(map->apply(sources[i]) == images[i]);
        // Unique when the sources span: anchoring at a rotated order yields
        // the same map.
        std::vector<Vec> rs{sources[1], sources[2], sources[0]};
        std::vector<Vec> ri{images[1], images[2], images[0]};
        auto map2 = affine_extension(rs, ri);
        REQUIRE(map2);
        CHECK(*map == *map2);
    }
}

TEST_CASE("linalg solve and inverse agree with Cramer oracle") {
    std::mt19937_64 rng(23u);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        auto a = random_points(rng, n, n);
        Vec b(n);
        for (auto& v : b) v = q(static_cast<long>(rng() % 9) - 4);
        auto expected = oracles::cramer_solve(a, b);
        if (!expected) continue;  // singular; oracle silent
        auto mine = linalg::solve(a, b);
        REQUIRE(mine);
        CHECK(*mine == *expected);
        auto inv = linalg::inverse(a);
        REQUIRE(inv);
        CHECK(linalg::mat_mul(a, *inv) == linalg::identity(n));
    }
}
