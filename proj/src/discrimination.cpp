#include "gptlab/discrimination.hpp"

#include "gptlab/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gptlab {

namespace {

Rational squared_norm(const Vec& v) {
    return linalg::dot(v, v);
}

/// Exact square root of a rational, when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Integer num = numerator(r), den = denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

// Feasibility program for a measurement (e_1..e_n) with e_i(s_j) = delta_ij.
// Variables are the stacked effect coefficients (a_i, b_i).
std::optional<std::vector<Effect>> solve_discrimination(const Polytope& p,
                                                        const std::vector<State>& states) {
    const std::size_t n = states.size();
    const std::size_t d = p.ambient();
    const std::size_t per = d + 1;
    const std::size_t vars = n * per;

    auto effect_row = [&](std::size_t i, const Vec& point) {
        Vec row(vars, Rational(0));
        for (std::size_t c = 0; c < d; ++c) row[i * per + c] = point[c];
        row[i * per + d] = 1;
        return row;
    };

    std::vector<lp::Constraint> cons;
    // Kronecker conditions.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cons.push_back({effect_row(i, states[j].x), lp::Relation::Equal,
                            Rational(i == j ? 1 : 0)});
        }
    }
    // Validity on every vertex.
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& v : p.vertices) {
            cons.push_back({effect_row(i, v), lp::Relation::GreaterEq, Rational(0)});
            cons.push_back({effect_row(i, v), lp::Relation::LessEq, Rational(1)});
        }
    }
    // The tuple sums to the unit effect as a functional on the space.
    for (const auto& v : p.vertices) {
        Vec row(vars, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < d; ++c) row[i * per + c] = v[c];
            row[i * per + d] = 1;
        }
        cons.push_back({std::move(row), lp::Relation::Equal, Rational(1)});
    }

    auto point = lp::feasible_point(vars, cons);
    if (!point) return std::nullopt;
    std::vector<Effect> effects(n);
    for (std::size_t i = 0; i < n; ++i) {
        effects[i].a.assign(point->begin() + static_cast<std::ptrdiff_t>(i * per),
                            point->begin() + static_cast<std::ptrdiff_t>(i * per + d));
        effects[i].b = (*point)[i * per + d];
    }
    return effects;
}

// The two-outcome measurement distinguishing an antipodal pure pair of the
// ball: e(s) = 1/2 + <s - c, s1 - c> / (2 r^2), exactly rational.
Measurement antipodal_measurement(const Ball& ball, const Vec& s1) {
    const Rational scale = 1 / (2 * ball.radius * ball.radius);
    Effect e;
    e.a = linalg::scale(scale, linalg::sub(s1, ball.center));
    e.b = Rational(1, 2) - linalg::dot(ball.center, e.a);
    Effect complement{linalg::scale(Rational(-1), e.a), 1 - e.b};
    return Measurement{{e, complement}};
}

void check_states(const StateSpace& space, const std::vector<State>& states) {
    for (const auto& s : states) {
        if (!space_contains(space, s.x)) throw std::domain_error("state outside the state space");
    }
}

std::optional<DistinguishabilityWitness> witness_for(const StateSpace& space,
                                                     const std::vector<State>& states) {
    const std::size_t n = states.size();
    if (n == 0) throw std::invalid_argument("distinguish: need at least one state");

    if (n == 1) {
        return DistinguishabilityWitness{states, Measurement{{unit_effect(space)}}};
    }

    if (is_polytope(space)) {
        auto effects = solve_discrimination(as_polytope(space), states);
        if (!effects) return std::nullopt;
        return DistinguishabilityWitness{states, Measurement{std::move(*effects)}};
    }

    const Ball& ball = as_ball(space);
    if (n > 2) return std::nullopt;
    const Rational r2 = ball.radius * ball.radius;
    const Vec d1 = linalg::sub(states[0].x, ball.center);
    const Vec d2 = linalg::sub(states[1].x, ball.center);
    const bool antipodal_pure = squared_norm(d1) == r2 && d2 == linalg::scale(Rational(-1), d1);
    if (!antipodal_pure) return std::nullopt;
    return DistinguishabilityWitness{states, antipodal_measurement(ball, states[0].x)};
}

// All distinguishable vertex-index subsets, grouped by size. Subsets of a
// distinguishable family are distinguishable, so a k-subset is tried only if
// every (k-1)-subset of it already passed; affine dependence rules a
// candidate out before any LP runs.
std::vector<std::vector<std::vector<std::size_t>>> distinguishable_subsets(const Polytope& p) {
    const std::size_t nv = p.vertices.size();
    const std::size_t cap = std::min(nv, p.dim + 1);
    std::vector<std::vector<std::vector<std::size_t>>> by_size(cap + 1);
    for (std::size_t i = 0; i < nv; ++i) by_size[1].push_back({i});

    StateSpace space = p;
    for (std::size_t k = 2; k <= cap; ++k) {
        const auto& prev = by_size[k - 1];
        if (prev.empty()) break;
        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        if (nv < k) break;
        for (;;) {
            bool candidate = true;
            // Every (k-1)-subset must be distinguishable.
            for (std::size_t drop = 0; drop < k && candidate; ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != drop) sub.push_back(comb[i]);
                candidate = std::binary_search(prev.begin(), prev.end(), sub);
            }
            if (candidate) {
                std::vector<Vec> pts;
                std::vector<State> states;
                for (auto i : comb) {
                    pts.push_back(p.vertices[i]);
                    states.push_back(State{p.vertices[i]});
                }
                if (!is_affinely_independent(pts) || !witness_for(space, states)) candidate = false;
            }
            if (candidate) by_size[k].push_back(comb);

            std::size_t j = k;
            while (j > 0 && comb[j - 1] == nv - k + j - 1) --j;
            if (j == 0) break;
            ++comb[j - 1];
            for (std::size_t i = j; i < k; ++i) comb[i] = comb[i - 1] + 1;
        }
    }
    return by_size;
}

}  // namespace

std::optional<DistinguishabilityWitness> distinguish(const StateSpace& space,
                                                     const std::vector<State>& states) {
    check_states(space, states);
    auto witness = witness_for(space, states);
    if (witness) {
        // Exact post-conditions before anything is returned.
        if (!validate_measurement(space, witness->measurement))
            throw std::logic_error("distinguish: witness measurement invalid");
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j)
                if (witness->measurement.effects[i].value(states[j].x) != Rational(i == j ? 1 : 0))
                    throw std::logic_error("distinguish: witness fails the delta condition");
    }
    return witness;
}

std::size_t max_distinguishable(const StateSpace& space) {
    if (is_ball(space)) return 2;
    const auto by_size = distinguishable_subsets(as_polytope(space));
    for (std::size_t k = by_size.size(); k-- > 0;) {
        if (!by_size[k].empty()) return k;
    }
    return 1;
}

bool is_simplex(const StateSpace& space) {
    if (is_ball(space)) return false;
    const Polytope& p = as_polytope(space);
    return p.vertices.size() == p.dim + 1 && is_affinely_independent(p.vertices);
}

std::vector<std::vector<std::size_t>> maximal_distinguishable_families(const Polytope& polytope) {
    const auto by_size = distinguishable_subsets(polytope);
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t k = 1; k < by_size.size(); ++k) {
        for (const auto& fam : by_size[k]) {
            // Maximal iff no distinguishable (k+1)-superset exists.
            bool extendable = false;
            if (k + 1 < by_size.size()) {
                for (const auto& sup : by_size[k + 1]) {
                    if (std::includes(sup.begin(), sup.end(), fam.begin(), fam.end())) {
                        extendable = true;
                        break;
                    }
                }
            }
            if (!extendable) maximal.push_back(fam);
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::optional<DistinguishableDecomposition> decompose_distinguishable(const StateSpace& space,
                                                                      const State& s) {
    check_states(space, {s});

    if (is_polytope(space)) {
        const Polytope& p = as_polytope(space);
        for (const auto& family : maximal_distinguishable_families(p)) {
            std::vector<Vec> generators;
            for (auto i : family) generators.push_back(p.vertices[i]);
            auto weights = convex_decompose(s.x, generators);
            if (!weights) continue;
            std::vector<State> states;
            for (auto i : family) states.push_back(State{p.vertices[i]});
            auto witness = distinguish(space, states);
            if (!witness) throw std::logic_error("decompose: family lost its witness");
            std::vector<Rational> full(family.size(), Rational(0));
            for (const auto& [idx, w] : *weights) full[idx] = w;
            return DistinguishableDecomposition{std::move(*witness), std::move(full)};
        }
        return std::nullopt;
    }

    const Ball& ball = as_ball(space);
    const Vec delta = linalg::sub(s.x, ball.center);
    const Rational rho2 = squared_norm(delta);
    if (rho2 == ball.radius * ball.radius) {
        return DistinguishableDecomposition{
            DistinguishabilityWitness{{s}, Measurement{{unit_effect(space)}}}, {Rational(1)}};
    }
    Vec axis;  // unit direction of the pure pair through s
    if (rho2 == 0) {
        axis.assign(ball.dim, Rational(0));
        axis[0] = 1;
    } else {
        const auto rho = exact_sqrt(rho2);
        if (!rho) return std::nullopt;  // pure pair not rational-representable
        axis = linalg::scale(1 / *rho, delta);
    }
    const Vec plus = linalg::add(ball.center, linalg::scale(ball.radius, axis));
    const Vec minus = linalg::sub(ball.center, linalg::scale(ball.radius, axis));
    const Rational rho = *exact_sqrt(rho2);
    const Rational lambda = (1 + rho / ball.radius) / 2;
    auto witness = distinguish(space, {State{plus}, State{minus}});
    if (!witness) throw std::logic_error("decompose: antipodal pair not distinguished");
    return DistinguishableDecomposition{std::move(*witness), {lambda, 1 - lambda}};
}

State sample_mixed_state(const Polytope& polytope, Rng& rng) {
    // Positive integer weights capped so that their sum stays below 2^16,
    // keeping each reduced weight denominator within that bound.
    const std::uint64_t cap = std::max<std::uint64_t>(2, (1u << 16) / polytope.vertices.size());
    Vec weights;
    Rational total = 0;
    for (std::size_t i = 0; i < polytope.vertices.size(); ++i) {
        weights.push_back(Rational(1 + static_cast<long>(rng.below(cap))));
        total += weights.back();
    }
    Vec x(polytope.ambient(), Rational(0));
    for (std::size_t i = 0; i < polytope.vertices.size(); ++i)
        x = linalg::add(x, linalg::scale(weights[i] / total, polytope.vertices[i]));
    return State{x};
}

P6Result satisfies_p6_sampled(const StateSpace& space, std::size_t num_samples,
                              std::uint64_t seed) {
    if (num_samples == 0) throw std::invalid_argument("p6: need at least one sample");
    if (is_ball(space)) return {true, std::nullopt};  // antipodal decomposition, analytically
    const Polytope& p = as_polytope(space);
    if (is_simplex(space)) return {true, std::nullopt};  // exact classical decomposition

    const auto families = maximal_distinguishable_families(p);
    Rng rng(seed);
    for (std::size_t t = 0; t < num_samples; ++t) {
        const State s = sample_mixed_state(p, rng);
        bool covered = false;
        for (const auto& family : families) {
            std::vector<Vec> generators;
            for (auto i : family) generators.push_back(p.vertices[i]);
            if (convex_decompose(s.x, generators)) {
                covered = true;
                break;
            }
        }
        if (!covered) return {false, s};
    }
    return {true, std::nullopt};
}

}  // namespace gptlab
