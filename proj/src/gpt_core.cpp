#include "gptlab/gpt_core.hpp"

#include <cmath>
#include <stdexcept>

namespace gptlab {

namespace {

Rational squared_distance(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Vec make_vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

// Rational point exactly on the unit circle at parameter t = tan(theta/2):
// ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Vec circle_point(const Rational& t) {
    const Rational den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

Rational approx_tan_half(double theta) {
    const long q = 64;
    return Rational(static_cast<long>(std::lround(std::tan(theta / 2) * q)), q);
}

std::vector<Vec> inscribed_polygon(std::size_t n) {
    std::vector<Vec> verts;
    const double step = 2 * M_PI / static_cast<double>(n);
    if (n % 2 == 0) {
        // Half the vertices plus their exact antipodes keeps the polygon
        // centrally symmetric.
        for (std::size_t k = 0; k < n / 2; ++k)
            verts.push_back(circle_point(approx_tan_half(step * static_cast<double>(k))));
        for (std::size_t k = 0; k < n / 2; ++k)
            verts.push_back({-verts[k][0], -verts[k][1]});
    } else {
        verts.push_back({Rational(1), Rational(0)});
        for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
            const Rational t = approx_tan_half(step * static_cast<double>(k));
            verts.push_back(circle_point(t));
            verts.push_back(circle_point(-t));
        }
    }
    return verts;
}

}  // namespace

StateSpace make_polytope(std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("state space: empty vertex list");
    for (const auto& v : vertices) {
        if (v.size() != vertices[0].size())
            throw std::invalid_argument("state space: mixed vertex dimensions");
    }
    Polytope p;
    p.vertices = extreme_points(std::move(vertices));
    p.dim = affine_dimension(p.vertices);
    return p;
}

StateSpace make_ball(std::size_t dim, Vec center, Rational radius) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("state space: ball dimension must be 2 or 3");
    if (center.size() != dim) throw std::invalid_argument("state space: center dimension mismatch");
    if (radius <= 0) throw std::invalid_argument("state space: radius must be positive");
    return Ball{dim, std::move(center), std::move(radius)};
}

StateSpace make_simplex(std::size_t c) {
    if (c == 0) throw std::invalid_argument("state space: simplex needs at least one vertex");
    std::vector<Vec> verts(c, Vec(c, Rational(0)));
    for (std::size_t i = 0; i < c; ++i) verts[i][i] = 1;
    return make_polytope(std::move(verts));
}

StateSpace make_cube(std::size_t d) {
    if (d == 0) throw std::invalid_argument("state space: cube dimension must be positive");
    if (d > 16) throw std::invalid_argument("state space: cube dimension too large");
    std::vector<Vec> verts;
    verts.reserve(1u << d);
    for (std::size_t mask = 0; mask < (1u << d); ++mask) {
        Vec v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = Rational((mask >> i) & 1);
        verts.push_back(std::move(v));
    }
    return make_polytope(std::move(verts));
}

StateSpace make_polygon(std::size_t n, PolygonStyle style) {
    if (n < 3) throw std::invalid_argument("state space: polygon needs at least 3 vertices");
    if (style == PolygonStyle::Auto) {
        switch (n) {
            case 3:
                return make_polytope({make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, -1})});
            case 4:
                return make_polytope({make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 0}),
                                      make_vec({0, -1})});
            case 6:
                // Orbit of the order-6 rational rotation [[0,-1],[1,1]].
                return make_polytope({make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 1}),
                                      make_vec({-1, 0}), make_vec({0, -1}), make_vec({1, -1})});
            case 8:
                // Signed-permutation orbit of (2, 1).
                return make_polytope({make_vec({2, 1}), make_vec({1, 2}), make_vec({-1, 2}),
                                      make_vec({-2, 1}), make_vec({-2, -1}), make_vec({-1, -2}),
                                      make_vec({1, -2}), make_vec({2, -1})});
            case 12:
                // Orbit of (2, 1) under the dihedral group generated by the
                // order-6 rotation above and the swap reflection.
                return make_polytope(
                    {make_vec({2, 1}), make_vec({-1, 3}), make_vec({-3, 2}), make_vec({-2, -1}),
                     make_vec({1, -3}), make_vec({3, -2}), make_vec({1, 2}), make_vec({-2, 3}),
                     make_vec({-3, 1}), make_vec({-1, -2}), make_vec({2, -3}), make_vec({3, -1})});
            default:
                break;
        }
    }
    return make_polytope(inscribed_polygon(n));
}

const Polytope& as_polytope(const StateSpace& space) {
    return std::get<Polytope>(space);
}

const Ball& as_ball(const StateSpace& space) {
    return std::get<Ball>(space);
}

bool is_polytope(const StateSpace& space) {
    return std::holds_alternative<Polytope>(space);
}

bool is_ball(const StateSpace& space) {
    return std::holds_alternative<Ball>(space);
}

std::size_t ambient_dimension(const StateSpace& space) {
    if (is_polytope(space)) return as_polytope(space).ambient();
    return as_ball(space).dim;
}

std::size_t space_dimension(const StateSpace& space) {
    if (is_polytope(space)) return as_polytope(space).dim;
    return as_ball(space).dim;
}

bool space_contains(const StateSpace& space, const Vec& point) {
    if (point.size() != ambient_dimension(space))
        throw std::invalid_argument("state: point dimension mismatch");
    if (is_polytope(space))
        return convex_decompose(point, as_polytope(space).vertices).has_value();
    const Ball& ball = as_ball(space);
    return squared_distance(point, ball.center) <= ball.radius * ball.radius;
}

State make_state(const StateSpace& space, Vec point) {
    if (!space_contains(space, point))
        throw std::domain_error("state: point outside the state space");
    return State{std::move(point)};
}

Effect unit_effect(const StateSpace& space) {
    return Effect{Vec(ambient_dimension(space), Rational(0)), Rational(1)};
}

Effect zero_effect(const StateSpace& space) {
    return Effect{Vec(ambient_dimension(space), Rational(0)), Rational(0)};
}

Rational effect_value(const Effect& e, const State& s) {
    if (e.a.size() != s.x.size()) throw std::invalid_argument("effect: dimension mismatch");
    return e.value(s.x);
}

bool validate_effect(const StateSpace& space, const Effect& e) {
    if (e.a.size() != ambient_dimension(space)) return false;
    if (is_polytope(space)) {
        for (const auto& v : as_polytope(space).vertices) {
            const Rational val = e.value(v);
            if (val < 0 || val > 1) return false;
        }
        return true;
    }
    const Ball& ball = as_ball(space);
    const Rational mid = e.value(ball.center);
    if (mid < 0 || mid > 1) return false;
    // Range over the ball is mid +- r|a|; compare squares to stay exact.
    const Rational reach2 = ball.radius * ball.radius * linalg::dot(e.a, e.a);
    return reach2 <= mid * mid && reach2 <= (1 - mid) * (1 - mid);
}

bool validate_measurement(const StateSpace& space, const Measurement& m) {
    if (m.effects.empty()) return false;
    for (const auto& e : m.effects) {
        if (!validate_effect(space, e)) return false;
    }
    if (is_polytope(space)) {
        // Summing to the unit effect as a functional on the space: an affine
        // function vanishing on all vertices vanishes on the affine hull.
        for (const auto& v : as_polytope(space).vertices) {
            Rational total = 0;
            for (const auto& e : m.effects) total += e.value(v);
            if (total != 1) return false;
        }
        return true;
    }
    Vec a_sum(ambient_dimension(space), Rational(0));
    Rational b_sum = 0;
    for (const auto& e : m.effects) {
        a_sum = linalg::add(a_sum, e.a);
        b_sum += e.b;
    }
    return a_sum == Vec(a_sum.size(), Rational(0)) && b_sum == 1;
}

Effect dual_on_effects(const AffineMap& psi, const Effect& e) {
    if (e.a.size() != psi.linear.size())
        throw std::invalid_argument("dual: effect/map dimension mismatch");
    return Effect{linalg::mat_vec(linalg::transpose(psi.linear), e.a),
                  linalg::dot(e.a, psi.translation) + e.b};
}

Effect EffectMap::apply(const Effect& e) const {
    return Effect{linalg::mat_vec(linear, e.a), linalg::dot(w, e.a) + e.b};
}

EffectMap dual_map(const AffineMap& psi) {
    return EffectMap{linalg::transpose(psi.linear), psi.translation};
}

AffineMap dual_of_effect_map(const EffectMap& phi) {
    return AffineMap{linalg::transpose(phi.linear), phi.w};
}

std::optional<State> functional_to_state(const StateSpace& space, const Vec& x) {
    if (!space_contains(space, x)) return std::nullopt;
    return State{x};
}

}  // namespace gptlab
