#pragma once

#include "gptlab/geometry.hpp"
#include "gptlab/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace gptlab {

// ---------------------------------------------------------------------------
// State spaces
// ---------------------------------------------------------------------------

/// Compact convex state space given by its extreme points. Construction
/// canonicalizes: vertices are reduced to the extreme ones and the affine
/// dimension is recorded.
struct Polytope {
    std::vector<Vec> vertices;
    std::size_t dim = 0;  // affine dimension of the vertex set

    std::size_t ambient() const { return vertices.front().size(); }
};

/// Euclidean disk (dim 2) or ball (dim 3) with rational center and radius;
/// the pure states are exactly the sphere points.
struct Ball {
    std::size_t dim = 3;
    Vec center;
    Rational radius;
};

using StateSpace = std::variant<Polytope, Ball>;

StateSpace make_polytope(std::vector<Vec> vertices);
StateSpace make_ball(std::size_t dim, Vec center, Rational radius);

/// Standard simplex with c vertices, embedded in R^c.
StateSpace make_simplex(std::size_t c);
/// Unit hypercube [0,1]^d with 2^d vertices.
StateSpace make_cube(std::size_t d);

enum class PolygonStyle {
    Auto,       // vertex-transitive construction when one exists over Q, else Inscribed
    Inscribed,  // near-regular rational points exactly on the unit circle
};

/// Convex n-gon with exact rational vertices. Vertex-transitive rational
/// polygons exist only for n in {3, 4, 6, 8, 12} (finite subgroups of
/// GL2(Q) have order at most 12); other n fall back to near-regular
/// polygons inscribed in the unit circle, centrally symmetric for even n.
StateSpace make_polygon(std::size_t n, PolygonStyle style = PolygonStyle::Auto);

const Polytope& as_polytope(const StateSpace& space);
const Ball& as_ball(const StateSpace& space);
bool is_polytope(const StateSpace& space);
bool is_ball(const StateSpace& space);

std::size_t ambient_dimension(const StateSpace& space);
std::size_t space_dimension(const StateSpace& space);  // affine dimension

bool space_contains(const StateSpace& space, const Vec& point);

struct State {
    Vec x;
    bool operator==(const State&) const = default;
};

/// Validated construction; throws std::domain_error when the point lies
/// outside the space.
State make_state(const StateSpace& space, Vec point);

// ---------------------------------------------------------------------------
// Effects and measurements
// ---------------------------------------------------------------------------

/// Affine functional e(s) = <a, s> + b with range in [0,1] on the space.
struct Effect {
    Vec a;
    Rational b;

    Rational value(const Vec& s) const { return linalg::dot(a, s) + b; }
    bool operator==(const Effect&) const = default;
};

struct Measurement {
    std::vector<Effect> effects;
};

Effect unit_effect(const StateSpace& space);
Effect zero_effect(const StateSpace& space);

Rational effect_value(const Effect& e, const State& s);

/// True iff the range of e over the space lies within [0,1]. Affine
/// functionals attain their extremes on extreme points, so polytopes are
/// checked on vertices; balls use the exact interval
/// [<a,c>+b - r|a|, <a,c>+b + r|a|] via squared comparisons.
bool validate_effect(const StateSpace& space, const Effect& e);

/// True iff every member is a valid effect and the tuple sums to the unit
/// effect as a functional on the space (checked on vertices for polytopes,
/// componentwise for balls).
bool validate_measurement(const StateSpace& space, const Measurement& m);

/// Pullback of an effect along a state-space map: (psi* e)(s) = e(psi(s)),
/// i.e. a' = A^T a and b' = <a, t> for psi = (A, t). Fixes the unit and
/// zero effects whenever psi maps the space into itself.
Effect dual_on_effects(const AffineMap& psi, const Effect& e);

/// Affine map on effect coefficients (a, b) |-> (L a, <w, a> + b); the shape
/// every unit- and zero-preserving affine bijection of the effect space takes.
struct EffectMap {
    Mat linear;
    Vec w;

    Effect apply(const Effect& e) const;
    bool operator==(const EffectMap&) const = default;
};

/// The dual of a state-space map as a map on the effect space.
EffectMap dual_map(const AffineMap& psi);

/// The dual of an effect-space map back on states; inverts dual_map exactly.
AffineMap dual_of_effect_map(const EffectMap& phi);

/// Identifies a normalized effect functional with a state: returns the state
/// with coordinates x iff x belongs to the space (the separating-hyperplane
/// alternative yields nothing).
std::optional<State> functional_to_state(const StateSpace& space, const Vec& x);

}  // namespace gptlab
