#pragma once

#include "gptlab/gpt_core.hpp"
#include "gptlab/rng.hpp"

#include <optional>
#include <vector>

namespace gptlab {

/// States together with a measurement hitting them with Kronecker-delta
/// statistics: effect i gives probability 1 on state i and 0 on the others.
struct DistinguishabilityWitness {
    std::vector<State> states;
    Measurement measurement;
};

/// Single-shot perfect discrimination. Polytopes are decided by exact LP
/// feasibility over the effect tuple; balls analytically (one state always;
/// two iff both are antipodal pure states; three or more never).
std::optional<DistinguishabilityWitness> distinguish(const StateSpace& space,
                                                     const std::vector<State>& states);

/// Largest size of a distinguishable family of states. For polytopes this is
/// an exhaustive search over vertex subsets in increasing size, pruned by
/// affine independence and by failed sub-families; restricting to pure
/// states loses nothing: if mixed states are distinguishable by (e_i), every
/// pure component v of state i's decomposition has e_i(v) = 1 (the values
/// average to 1 and cannot exceed it), and picking one such vertex per state
/// yields distinct pure states distinguished by the same measurement.
std::size_t max_distinguishable(const StateSpace& space);

/// True iff the space is the convex hull of an affinely independent vertex
/// set (balls are never simplices).
bool is_simplex(const StateSpace& space);

struct DistinguishableDecomposition {
    DistinguishabilityWitness witness;
    std::vector<Rational> weights;  // aligned with witness.states, sums to 1
};

/// Writes the state as a probabilistic mixture of distinguishable pure
/// states, if one of the enumerated maximal families contains it. On the
/// ball the antipodal pure pair through the state is used; when that pair
/// has irrational coordinates the exact decomposition is not representable
/// and nothing is returned.
std::optional<DistinguishableDecomposition> decompose_distinguishable(const StateSpace& space,
                                                                      const State& s);

struct P6Result {
    bool holds = false;
    std::optional<State> counterexample;
};

/// Sampled check of decomposability into distinguishable pure states.
/// Simplices and balls hold exactly without sampling; other polytopes draw
/// seeded interior states and report the first one that fails.
P6Result satisfies_p6_sampled(const StateSpace& space, std::size_t num_samples,
                              std::uint64_t seed);

/// All inclusion-maximal distinguishable vertex-index families, in
/// lexicographic order.
std::vector<std::vector<std::size_t>> maximal_distinguishable_families(const Polytope& polytope);

/// Interior state with reproducible rational weights (numerators up to 2^16)
/// over all vertices.
State sample_mixed_state(const Polytope& polytope, Rng& rng);

}  // namespace gptlab
