#pragma once

#include "gptlab/gpt_core.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace gptlab {

/// Affine bijection of the state space onto itself. Pure states map to pure
/// states, so a polytope automorphism is recorded with its vertex
/// permutation; forward and inverse compose to the identity exactly.
struct Automorphism {
    AffineMap forward;
    AffineMap inverse;
    std::vector<std::size_t> vertex_permutation;  // forward(v_i) = v_perm[i]
};

struct FiniteGroup {
    std::vector<Automorphism> elements;  // sorted by permutation, identity first
};

/// Symbolic stand-in for the continuous group of rotations and reflections
/// about the center.
struct BallOrthogonal {
    std::size_t dim;
    Vec center;
};

using AutomorphismGroup = std::variant<FiniteGroup, BallOrthogonal>;

/// Every affine bijection of the space onto itself. Polytope automorphisms
/// permute the vertex set and preserve the inertia form of the vertices, so
/// candidates are enumerated as Gram-compatible vertex permutations and each
/// survivor is rebuilt as an exact affine map and verified on all vertices.
AutomorphismGroup automorphism_group(const StateSpace& space);

std::optional<std::size_t> group_order(const AutomorphismGroup& group);  // nullopt: continuous

/// True iff the automorphism group acts transitively on the pure states.
bool satisfies_p5(const StateSpace& space);
bool satisfies_p5(const Polytope& polytope, const FiniteGroup& group);

/// Rotation aligning one ball state with another, reported in floating
/// point; the equivalence decision itself is exact.
struct BallRotationWitness {
    std::vector<std::vector<double>> rotation;
    Vec center;
};

using EquivalenceWitness = std::variant<Automorphism, BallRotationWitness>;

/// Physical equivalence of two states: an automorphism with psi(s2) = s1.
/// Polytopes scan the finite group; ball states are equivalent iff they are
/// equidistant from the center (exact squared comparison).
std::optional<EquivalenceWitness> are_equivalent(const StateSpace& space, const State& s1,
                                                 const State& s2);
std::optional<Automorphism> are_equivalent(const Polytope& polytope, const FiniteGroup& group,
                                           const State& s1, const State& s2);

/// A state fixed by every automorphism: the vertex average for polytopes,
/// the center for balls. Verified invariant before return.
State invariant_state(const StateSpace& space);

/// True iff the invariant state is the only one: the common fixed-point set
/// of the group meets the space in a single point.
bool invariant_state_unique(const StateSpace& space);
bool invariant_state_unique(const Polytope& polytope, const FiniteGroup& group);

/// Group average M = (1/|G|) sum of A^T A over the linear parts; satisfies
/// A^T M A = M exactly for every element. Identity for balls.
Mat invariant_inner_product(const StateSpace& space);
Mat invariant_inner_product(const Polytope& polytope, const FiniteGroup& group);

/// Vertex-transitivity in the group-invariant inner product. The metric
/// condition holds by construction of the invariant form, so this reduces to
/// transitivity; the metric check is kept as a consistency assertion.
bool is_isogonal(const StateSpace& space);
bool is_isogonal(const Polytope& polytope, const FiniteGroup& group);

/// Orbit of a state under the group, deduplicated exactly, in first-seen
/// order. Throws for balls (continuous orbits are not enumerable).
std::vector<State> orbit(const StateSpace& space, const State& s);
std::vector<State> orbit(const Polytope& polytope, const FiniteGroup& group, const State& s);

}  // namespace gptlab
