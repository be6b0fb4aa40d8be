#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gptlab/corpus.hpp"
#include "gptlab/discrimination.hpp"
#include "gptlab/errors.hpp"
#include "gptlab/metrics.hpp"
#include "gptlab/symmetry.hpp"

#include <algorithm>
#include <cmath>

using namespace gptlab;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Vec pt(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(q(x));
    return v;
}

StateSpace bloch_ball() { return make_ball(3, Vec(3, q(0)), q(1)); }

Rational exact(const MetricValue& v) { return std::get<Rational>(v); }

// Total-variation oracle for classical state spaces: the distance between
// two distributions is the sum of the positive parts of their difference.
Rational total_variation(const Vec& p1, const Vec& p2) {
    Rational tv = 0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (p1[i] > p2[i]) tv += p1[i] - p2[i];
    }
    return tv;
}

// Values of each ray on each vertex, sorted, as a representation-free
// fingerprint of the ray set.
std::vector<std::vector<Rational>> ray_value_table(const StateSpace& space) {
    std::vector<std::vector<Rational>> table;
    for (const auto& ray : indecomposable_effects(space)) {
        std::vector<Rational> vals;
        for (const auto& v : as_polytope(space).vertices) vals.push_back(ray.value(v));
        table.push_back(std::move(vals));
    }
    std::sort(table.begin(), table.end());
    return table;
}

}  // namespace

TEST_CASE("kolmogorov distance basics") {
    auto seg = make_simplex(2);
    const State p{pt({1, 0})}, r{pt({0, 1})};
    CHECK(exact(kolmogorov_distance(seg, p, p)) == 0);
    CHECK(exact(kolmogorov_distance(seg, p, r)) == 1);

    auto ball = bloch_ball();
    const State north{pt({0, 0, 1})}, south{pt({0, 0, -1})};
    CHECK(std::get<double>(kolmogorov_distance(ball, north, south)) == doctest::Approx(1.0));
}

TEST_CASE("distance equals total variation on classical spaces") {
    Rng rng(555);
    auto simplex = make_simplex(4);
    for (int trial = 0; trial < 25; ++trial) {
        const State s1 = sample_mixed_state(as_polytope(simplex), rng);
        const State s2 = sample_mixed_state(as_polytope(simplex), rng);
        CHECK(exact(kolmogorov_distance(simplex, s1, s2)) == total_variation(s1.x, s2.x));
    }
}

TEST_CASE("optimal success probability") {
    auto seg = make_simplex(2);
    const State s{{q(1, 2), q(1, 2)}};
    CHECK(exact(optimal_success_probability(seg, s, s)) == q(1, 2));

    const State p{{q(3, 4), q(1, 4)}}, r{{q(1, 4), q(3, 4)}};
    CHECK(exact(optimal_success_probability(seg, p, r)) == q(3, 4));

    // Any distinguishable pair reaches certainty.
    auto square = make_cube(2);
    CHECK(exact(optimal_success_probability(square, State{pt({0, 0})}, State{pt({1, 1})})) == 1);
}

TEST_CASE("distance and success probability are linked exactly on random corpora") {
    Rng rng(808);
    for (int instance = 0; instance < 8; ++instance) {
        const Polytope p = random_polytope(rng, 2 + instance % 2, 4, 8, false);
        StateSpace space = p;
        for (int trial = 0; trial < 5; ++trial) {
            const State s1 = sample_mixed_state(p, rng);
            const State s2 = sample_mixed_state(p, rng);
            const Rational d = exact(kolmogorov_distance(space, s1, s2));
            const Rational sp = exact(optimal_success_probability(space, s1, s2));
            CHECK(d == 2 * sp - 1);
        }
    }
}

TEST_CASE("metric axioms on sampled triples") {
    Rng rng(909);
    const Polytope p = random_polytope(rng, 2, 4, 8, false);
    StateSpace space = p;
    for (int trial = 0; trial < 10; ++trial) {
        const State a = sample_mixed_state(p, rng);
        const State b = sample_mixed_state(p, rng);
        const State c = sample_mixed_state(p, rng);
        const Rational ab = exact(kolmogorov_distance(space, a, b));
        const Rational ba = exact(kolmogorov_distance(space, b, a));
        const Rational ac = exact(kolmogorov_distance(space, a, c));
        const Rational cb = exact(kolmogorov_distance(space, c, b));
        CHECK(ab == ba);
        CHECK(ab <= ac + cb);
        CHECK(exact(kolmogorov_distance(space, a, a)) == 0);
    }
}

TEST_CASE("automorphisms preserve the distance; self-maps never increase it") {
    Rng rng(111);
    auto hexagon = make_polygon(6);
    const auto group = std::get<FiniteGroup>(automorphism_group(hexagon));
    const State center = invariant_state(hexagon);
    for (int trial = 0; trial < 6; ++trial) {
        const State s1 = sample_mixed_state(as_polytope(hexagon), rng);
        const State s2 = sample_mixed_state(as_polytope(hexagon), rng);
        const Rational base = exact(kolmogorov_distance(hexagon, s1, s2));
        for (const auto& a : group.elements) {
            const State t1{a.forward.apply(s1.x)}, t2{a.forward.apply(s2.x)};
            CHECK(exact(kolmogorov_distance(hexagon, t1, t2)) == base);
            // Contraction toward the invariant state is an affine self-map.
            const Rational w = Rational(rng.int_in(0, 16), 16);
            auto mix = [&](const Vec& x) {
                return linalg::add(linalg::scale(1 - w, a.forward.apply(x)),
                                   linalg::scale(w, center.x));
            };
            const State m1{mix(s1.x)}, m2{mix(s2.x)};
            CHECK(exact(kolmogorov_distance(hexagon, m1, m2)) <= base);
        }
    }
}

TEST_CASE("distance 1 iff the pair is distinguishable") {
    auto square = make_cube(2);
    Rng rng(222);
    const std::vector<std::pair<State, State>> pairs = {
        {State{pt({0, 0})}, State{pt({1, 1})}},
        {State{pt({0, 0})}, State{pt({1, 0})}},
        {sample_mixed_state(as_polytope(square), rng),
         sample_mixed_state(as_polytope(square), rng)},
        {State{pt({0, 0})}, State{{q(1, 2), q(1)}}},
    };
    for (const auto& [s1, s2] : pairs) {
        const bool dist = distinguish(square, {s1, s2}).has_value();
        CHECK((exact(kolmogorov_distance(square, s1, s2)) == 1) == dist);
    }
}

TEST_CASE("indecomposable effects of the segment, triangle, and square") {
    auto segment = make_polytope({Vec{q(0)}, Vec{q(1)}});
    auto seg_rays = indecomposable_effects(segment);
    REQUIRE(seg_rays.size() == 2);  // x and 1 - x
    CHECK(std::find(seg_rays.begin(), seg_rays.end(), EffectRay{{q(1)}, q(0)}) != seg_rays.end());
    CHECK(std::find(seg_rays.begin(), seg_rays.end(), EffectRay{{q(-1)}, q(1)}) != seg_rays.end());

    // Triangle: the three functionals with value 1 at one vertex, 0 at the others.
    auto tri_table = ray_value_table(make_simplex(3));
    REQUIRE(tri_table.size() == 3);
    for (const auto& vals : tri_table) {
        CHECK(std::count(vals.begin(), vals.end(), q(1)) == 1);
        CHECK(std::count(vals.begin(), vals.end(), q(0)) == 2);
    }

    // Square [0,1]^2 with vertices (0,0),(1,0),(0,1),(1,1): x, 1-x, y, 1-y,
    // each vanishing on one edge.
    auto sq_table = ray_value_table(make_cube(2));
    REQUIRE(sq_table.size() == 4);
    for (const auto& vals : sq_table) {
        CHECK(std::count(vals.begin(), vals.end(), q(1)) == 2);
        CHECK(std::count(vals.begin(), vals.end(), q(0)) == 2);
    }

    CHECK_THROWS_AS(indecomposable_effects(bloch_ball()), UnsupportedError);
}

TEST_CASE("rays are valid effects and pairwise indecomposable") {
    Rng rng(333);
    for (int instance = 0; instance < 4; ++instance) {
        const Polytope p = random_polytope(rng, 2 + instance % 2, 4, 7, false);
        StateSpace space = p;
        const auto rays = indecomposable_effects(space);
        for (const auto& ray : rays) {
            CHECK(validate_effect(space, ray.as_effect()));
            Rational maxval = 0;
            for (const auto& v : p.vertices) maxval = std::max(maxval, ray.value(v));
            CHECK(maxval == 1);
        }
        // No ray is a positive combination of two nonproportional rays: such
        // a combination is strictly positive wherever either summand is, so
        // comparing zero sets on the vertices suffices for the pairwise check.
        for (std::size_t k = 0; k < rays.size(); ++k) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                for (std::size_t j = i + 1; j < rays.size(); ++j) {
                    if (i == k || j == k) continue;
                    bool zero_cover = true;  // rays i and j both vanish on k's zero set
                    for (const auto& v : p.vertices) {
                        if (rays[k].value(v) == 0 &&
                            (rays[i].value(v) != 0 || rays[j].value(v) != 0)) {
                            zero_cover = false;
                            break;
                        }
                    }
                    CHECK(!zero_cover);
                }
            }
        }
    }
}

TEST_CASE("entropy on classical spaces is the Shannon entropy") {
    auto simplex = make_simplex(3);
    const State uniform{Vec(3, q(1, 3))};
    CHECK(entropy(simplex, uniform) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    const State skew{{q(1, 2), q(1, 4), q(1, 4)}};
    CHECK(entropy(simplex, skew) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(entropy(simplex, State{pt({1, 0, 0})}) == doctest::Approx(0.0));
}

TEST_CASE("entropy on symmetric polytopes and the ball") {
    auto square = make_cube(2);
    CHECK(entropy(square, State{{q(1, 2), q(1, 2)}}) == doctest::Approx(1.0));
    CHECK(entropy(square, State{pt({0, 0})}) == doctest::Approx(0.0));

    auto ball = bloch_ball();
    CHECK(entropy(ball, State{pt({0, 0, 0})}) == doctest::Approx(1.0));
    CHECK(entropy(ball, State{pt({1, 0, 0})}) == doctest::Approx(0.0));
    CHECK(entropy(ball, State{{q(0), q(0), q(1, 2)}}) ==
          doctest::Approx(binary_entropy(0.75)).epsilon(1e-12));
    CHECK(binary_entropy(0.75) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under automorphisms and maximal at the invariant state") {
    Rng rng(444);
    auto hexagon = make_polygon(6);
    const auto group = std::get<FiniteGroup>(automorphism_group(hexagon));
    const double s_max = entropy(hexagon, invariant_state(hexagon));
    for (int trial = 0; trial < 10; ++trial) {
        const State s = sample_mixed_state(as_polytope(hexagon), rng);
        const double h = entropy(hexagon, s);
        CHECK(h <= s_max + 1e-9);
        for (const auto& a : group.elements)
            CHECK(entropy(hexagon, State{a.forward.apply(s.x)}) == doctest::Approx(h).epsilon(1e-9));
    }
}
