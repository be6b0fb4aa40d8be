#include "gptlab/metrics.hpp"

#include "gptlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gptlab {

namespace {

void check_pair(const StateSpace& space, const State& s1, const State& s2) {
    if (!space_contains(space, s1.x) || !space_contains(space, s2.x))
        throw std::domain_error("metrics: state outside the state space");
}

double ball_distance(const Ball& ball, const State& s1, const State& s2) {
    const Rational d2 = linalg::dot(linalg::sub(s1.x, s2.x), linalg::sub(s1.x, s2.x));
    return std::sqrt(to_double(d2)) / (2 * to_double(ball.radius));
}

// Effect-coefficient rows over stacked (a_i, b_i) variables.
Vec effect_row(std::size_t num_effects, std::size_t i, const Vec& point) {
    const std::size_t per = point.size() + 1;
    Vec row(num_effects * per, Rational(0));
    for (std::size_t c = 0; c < point.size(); ++c) row[i * per + c] = point[c];
    row[i * per + point.size()] = 1;
    return row;
}

// Affine frame of the hull: anchor vertex indices plus the affine
// coordinates of every vertex with respect to them.
struct HullFrame {
    std::vector<std::size_t> anchor;  // size dim+1
    std::vector<Vec> mu;              // per vertex, length dim+1, sums to 1
};

HullFrame hull_frame(const Polytope& p) {
    HullFrame f;
    f.anchor.push_back(0);
    Mat dirs;
    for (std::size_t i = 1; i < p.vertices.size() && dirs.size() < p.dim; ++i) {
        Mat trial = dirs;
        trial.push_back(linalg::sub(p.vertices[i], p.vertices[0]));
        if (linalg::rank(trial) == trial.size()) {
            dirs = std::move(trial);
            f.anchor.push_back(i);
        }
    }
    // Lifted system: mu solves [w_0 .. w_n; 1 .. 1] mu = (v; 1).
    const std::size_t d = p.ambient(), n = p.dim;
    Mat lifted(d + 1, Vec(n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t r = 0; r < d; ++r) lifted[r][k] = p.vertices[f.anchor[k]][r];
        lifted[d][k] = 1;
    }
    for (const auto& v : p.vertices) {
        Vec rhs = v;
        rhs.push_back(1);
        auto mu = linalg::solve(lifted, rhs);
        if (!mu) throw std::logic_error("metrics: vertex outside its own hull frame");
        f.mu.push_back(std::move(*mu));
    }
    return f;
}

// Values of an affine functional at the anchor vertices.
Vec anchor_values(const HullFrame& f, const Polytope& p, const EffectRay& ray) {
    Vec y(f.anchor.size());
    for (std::size_t k = 0; k < f.anchor.size(); ++k) y[k] = ray.value(p.vertices[f.anchor[k]]);
    return y;
}

std::vector<EffectRay> polytope_rays(const Polytope& p) {
    if (p.dim == 0) {
        // A single point only carries the scaled unit effect.
        return {EffectRay{Vec(p.ambient(), Rational(0)), Rational(1)}};
    }
    const HullFrame frame = hull_frame(p);
    const std::size_t n = p.dim;
    const std::size_t nv = p.vertices.size();

    // Recover an ambient (a, b) representative of a value vector y at the
    // anchors; free coefficients are pinned to zero deterministically.
    const std::size_t d = p.ambient();
    Mat system(n + 1, Vec(d + 1));
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t c = 0; c < d; ++c) system[k][c] = p.vertices[frame.anchor[k]][c];
        system[k][d] = 1;
    }
    auto to_ambient = [&](const Vec& y) {
        auto ab = linalg::solve(system, y);
        if (!ab) throw std::logic_error("metrics: inconsistent ray recovery");
        EffectRay ray;
        ray.a.assign(ab->begin(), ab->end() - 1);
        ray.b = ab->back();
        return ray;
    };

    std::vector<EffectRay> rays;
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = i;
    for (;;) {
        Mat active(n, Vec(n + 1));
        for (std::size_t i = 0; i < n; ++i) active[i] = frame.mu[comb[i]];
        auto kernel = linalg::null_space(active);
        if (kernel.size() == 1) {
            Vec y = kernel[0];
            // Orient so the functional is nonnegative on every vertex.
            bool plus_ok = true, minus_ok = true;
            for (const auto& mu : frame.mu) {
                const Rational v = linalg::dot(mu, y);
                if (v < 0) plus_ok = false;
                if (v > 0) minus_ok = false;
            }
            if (plus_ok || minus_ok) {
                if (!plus_ok) y = linalg::scale(Rational(-1), y);
                Rational maxval = 0;
                for (const auto& mu : frame.mu) maxval = std::max(maxval, linalg::dot(mu, y));
                if (maxval > 0) {
                    y = linalg::scale(1 / maxval, y);
                    EffectRay ray = to_ambient(y);
                    if (std::find(rays.begin(), rays.end(), ray) == rays.end())
                        rays.push_back(std::move(ray));
                }
            }
        }
        std::size_t j = n;
        while (j > 0 && comb[j - 1] == nv - n + j - 1) --j;
        if (j == 0) break;
        ++comb[j - 1];
        for (std::size_t i = j; i < n; ++i) comb[i] = comb[i - 1] + 1;
    }
    std::sort(rays.begin(), rays.end(), [](const EffectRay& l, const EffectRay& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    return rays;
}

}  // namespace

double metric_as_double(const MetricValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return to_double(*r);
    return std::get<double>(v);
}

MetricValue kolmogorov_distance(const StateSpace& space, const State& s1, const State& s2) {
    check_pair(space, s1, s2);
    if (is_ball(space)) return ball_distance(as_ball(space), s1, s2);

    const Polytope& p = as_polytope(space);
    const std::size_t d = p.ambient();
    lp::LinearProgram prog;
    prog.num_vars = d + 1;
    prog.objective = linalg::sub(s1.x, s2.x);
    prog.objective.push_back(0);  // the offset cancels in e(s1) - e(s2)
    for (const auto& v : p.vertices) {
        Vec row = v;
        row.push_back(1);
        prog.constraints.push_back({row, lp::Relation::GreaterEq, Rational(0)});
        prog.constraints.push_back({std::move(row), lp::Relation::LessEq, Rational(1)});
    }
    auto res = lp::solve(prog);
    if (res.status != lp::Status::Optimal)
        throw std::logic_error("metrics: distance program not optimal");
    return res.optimum;
}

lp::LinearProgram success_probability_program(const Polytope& polytope, const State& s1,
                                              const State& s2, bool negate_objective) {
    const std::size_t d = polytope.ambient();
    const std::size_t per = d + 1;
    lp::LinearProgram prog;
    prog.num_vars = 2 * per;
    // maximize (e1(s1) + e2(s2)) / 2 over measurements (e1, e2).
    prog.objective = effect_row(2, 0, s1.x);
    const Vec second = effect_row(2, 1, s2.x);
    for (std::size_t j = 0; j < prog.objective.size(); ++j) {
        prog.objective[j] = (prog.objective[j] + second[j]) / 2;
        if (negate_objective) prog.objective[j] = -prog.objective[j];
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto& v : polytope.vertices) {
            Vec row = effect_row(2, i, v);
            prog.constraints.push_back({row, lp::Relation::GreaterEq, Rational(0)});
            prog.constraints.push_back({std::move(row), lp::Relation::LessEq, Rational(1)});
        }
    }
    for (const auto& v : polytope.vertices) {
        Vec row(2 * per, Rational(0));
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t c = 0; c < d; ++c) row[i * per + c] = v[c];
            row[i * per + d] = 1;
        }
        prog.constraints.push_back({std::move(row), lp::Relation::Equal, Rational(1)});
    }
    return prog;
}

MetricValue optimal_success_probability(const StateSpace& space, const State& s1,
                                        const State& s2) {
    check_pair(space, s1, s2);
    if (is_ball(space)) return (1 + ball_distance(as_ball(space), s1, s2)) / 2;

    auto res = lp::solve(success_probability_program(as_polytope(space), s1, s2));
    if (res.status != lp::Status::Optimal)
        throw std::logic_error("metrics: success program not optimal");
    return res.optimum;
}

std::vector<EffectRay> indecomposable_effects(const StateSpace& space) {
    if (is_ball(space))
        throw UnsupportedError("indecomposable effects form a continuum on the ball");
    const Polytope& p = as_polytope(space);
    if (p.vertices.size() > 40)
        throw UnsupportedError("indecomposable effect enumeration capped at 40 vertices");
    return polytope_rays(p);
}

double binary_entropy(double p) {
    return shannon_entropy({p, 1 - p});
}

double shannon_entropy(const std::vector<double>& p) {
    double h = 0;
    for (double v : p) {
        if (v > 0) h -= v * std::log2(v);
    }
    return h;
}

double entropy(const StateSpace& space, const State& s) {
    if (!space_contains(space, s.x)) throw std::domain_error("entropy: state outside the space");
    if (is_ball(space)) {
        const Ball& b = as_ball(space);
        const Rational d2 = linalg::dot(linalg::sub(s.x, b.center), linalg::sub(s.x, b.center));
        const double rho = std::sqrt(to_double(d2)) / to_double(b.radius);
        return binary_entropy((1 + rho) / 2);
    }

    const Polytope& p = as_polytope(space);
    if (p.dim == 0) return 0.0;
    const auto rays = indecomposable_effects(space);
    const HullFrame frame = hull_frame(p);
    const std::size_t n = p.dim;

    // Measurements assembled from rays: weights lambda >= 0 with
    // sum_j lambda_j ray_j = u, a bounded polytope in lambda space. The
    // infimum of H over it is attained at a basic solution, enumerated as
    // nonsingular (n+1)-column subsets.
    std::vector<Vec> columns;
    for (const auto& ray : rays) columns.push_back(anchor_values(frame, p, ray));
    const Vec unit(n + 1, Rational(1));

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> comb(n + 1);
    for (std::size_t i = 0; i <= n; ++i) comb[i] = i;
    if (rays.size() < n + 1) throw std::logic_error("entropy: rays do not span");
    for (;;) {
        Mat mat(n + 1, Vec(n + 1));
        for (std::size_t r = 0; r <= n; ++r)
            for (std::size_t c = 0; c <= n; ++c) mat[r][c] = columns[comb[c]][r];
        if (auto inv = linalg::inverse(mat)) {
            const Vec lambda = linalg::mat_vec(*inv, unit);
            bool feasible = true;
            for (const auto& l : lambda) {
                if (l < 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                std::vector<double> outcome;
                for (std::size_t c = 0; c <= n; ++c) {
                    if (lambda[c] == 0) continue;
                    outcome.push_back(to_double(lambda[c] * rays[comb[c]].value(s.x)));
                }
                best = std::min(best, shannon_entropy(outcome));
            }
        }
        std::size_t j = n + 1;
        while (j > 0 && comb[j - 1] == rays.size() - (n + 1) + j - 1) --j;
        if (j == 0) break;
        ++comb[j - 1];
        for (std::size_t i = j; i < n + 1; ++i) comb[i] = comb[i - 1] + 1;
    }
    if (!std::isfinite(best)) throw std::logic_error("entropy: no feasible measurement found");
    return best;
}

}  // namespace gptlab
