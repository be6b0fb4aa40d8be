#pragma once

#include "gptlab/gpt_core.hpp"
#include "gptlab/lp.hpp"

#include <variant>
#include <vector>

namespace gptlab {

/// Metric results are exact rationals on polytopes and doubles on balls.
using MetricValue = std::variant<Rational, double>;

double metric_as_double(const MetricValue& v);

/// Operational distance sup_e |e(s1) - e(s2)|: on polytopes the exact LP
/// optimum of <a, s1 - s2> over the effect coefficients (the offset cancels),
/// on balls |s1 - s2| / (2r).
MetricValue kolmogorov_distance(const StateSpace& space, const State& s1, const State& s2);

/// Best single-shot success probability for discriminating two equiprobable
/// states, maximized over two-outcome measurements (e, u - e): the exact LP
/// optimum of (e1(s1) + e2(s2)) / 2, or the ball closed form.
MetricValue optimal_success_probability(const StateSpace& space, const State& s1,
                                        const State& s2);

/// The measurement LP behind optimal_success_probability, exposed so that
/// harnesses can manipulate it (the verification command's fault-injection
/// hook flips the objective sign). Variables are (a1, b1, a2, b2).
lp::LinearProgram success_probability_program(const Polytope& polytope, const State& s1,
                                              const State& s2, bool negate_objective = false);

/// Extreme ray of the cone of affine functionals that are nonnegative on the
/// space, normalized so its maximum over the space is 1. These are the
/// indecomposable effects: no ray splits into a sum of two nonproportional
/// nonnegative affine functionals. (The notion of indecomposable measurement
/// is imported from the GPT entropy literature; a measurement is
/// indecomposable when every effect of it lies on such a ray.)
struct EffectRay {
    Vec a;
    Rational b;

    Rational value(const Vec& s) const { return linalg::dot(a, s) + b; }
    Effect as_effect() const { return Effect{a, b}; }
    bool operator==(const EffectRay&) const = default;
};

/// All extreme rays, enumerated exactly from vertex-nonnegativity constraint
/// subsets in an affine frame of the hull; deduplicated and sorted. Balls
/// have a continuum of rays and are unsupported.
std::vector<EffectRay> indecomposable_effects(const StateSpace& space);

/// Measurement entropy: the infimum of the Shannon entropy of the outcome
/// distribution over indecomposable measurements. On polytopes the feasible
/// ray weightings form a polytope and the entropy is concave in the outcome
/// distribution, so the infimum is attained at a basic solution; these are
/// enumerated exactly and only the logarithms are floating point. Balls use
/// the closed form h((1 + |s - c|/r) / 2).
double entropy(const StateSpace& space, const State& s);

double binary_entropy(double p);
double shannon_entropy(const std::vector<double>& p);

}  // namespace gptlab
