#include "gptlab/verify.hpp"

#include "gptlab/analysis.hpp"
#include "gptlab/corpus.hpp"
#include "gptlab/discrimination.hpp"
#include "gptlab/errors.hpp"
#include "gptlab/metrics.hpp"
#include "gptlab/space_io.hpp"
#include "gptlab/symmetry.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace gptlab {

namespace {

constexpr double kFloatTol = 1e-9;

struct Instance {
    std::string name;
    StateSpace space;
};

std::vector<Instance> build_corpus(const VerifyOptions& opt, Rng& rng) {
    std::vector<Instance> corpus;
    for (std::size_t c = 2; c <= 5; ++c)
        corpus.push_back({"simplex(c=" + std::to_string(c) + ")", make_simplex(c)});
    corpus.push_back({"square", make_cube(2)});
    corpus.push_back({"cube", make_cube(3)});
    for (std::size_t n : {3u, 4u, 6u, 8u, 12u})
        corpus.push_back({"polygon(n=" + std::to_string(n) + ")", make_polygon(n)});
    corpus.push_back({"disk", make_ball(2, Vec(2, Rational(0)), Rational(1))});
    corpus.push_back({"ball", make_ball(3, Vec(3, Rational(0)), Rational(1))});
    for (std::size_t i = 0; i < opt.random_polytopes; ++i) {
        const std::size_t dim = opt.dim_min + i % (opt.dim_max - opt.dim_min + 1);
        corpus.push_back({"random-polytope#" + std::to_string(i),
                          random_polytope(rng, dim, opt.vertices_min, opt.vertices_max, true)});
    }
    for (std::size_t i = 0; i < opt.random_simplices; ++i) {
        const std::size_t dim = opt.dim_min + i % (opt.dim_max - opt.dim_min + 1);
        corpus.push_back({"random-simplex#" + std::to_string(i), random_simplex(rng, dim)});
    }
    return corpus;
}

State sample_state(const StateSpace& space, Rng& rng) {
    if (is_polytope(space)) return sample_mixed_state(as_polytope(space), rng);
    // Rational point in the ball: jitter the center by small rational steps.
    const Ball& b = as_ball(space);
    Vec x = b.center;
    for (std::size_t i = 0; i < b.dim; ++i)
        x[i] += b.radius * Rational(rng.int_in(-8, 8), 17);
    if (!space_contains(space, x)) return State{b.center};
    return State{x};
}

class Runner {
  public:
    Runner(const VerifyOptions& opt) : opt_(opt) {}

    void record(const std::string& check, const std::string& instance, bool passed,
                std::string detail = "") {
        report_.outcomes.push_back({check, instance, passed, std::move(detail)});
    }

    void run_instance(const Instance& inst) {
        Rng rng(opt_.seed ^ std::hash<std::string>{}(inst.name));
        const AnalysisReport report = analyze(inst.space, {opt_.p6_samples, opt_.seed});

        // Distinguishability bound and its equality case.
        record("bound c <= dim+1", inst.name, report.max_distinguishable <= report.dim + 1,
               "c=" + std::to_string(report.max_distinguishable));
        if (is_polytope(inst.space)) {
            record("c = dim+1 iff simplex", inst.name,
                   (report.max_distinguishable == report.dim + 1) == report.simplex);
        }

        // Decomposability classification and its consequence.
        if (is_polytope(inst.space)) {
            record("decomposability iff simplex", inst.name, report.p6_holds == report.simplex,
                   report.p6_holds ? "holds" : "fails");
            if (report.p6_holds)
                record("decomposability forces c = dim+1", inst.name,
                       report.max_distinguishable == report.dim + 1);
            // Classification consistency: a symmetric polytope is isogonal,
            // and adding decomposability pins it down to a simplex.
            if (report.p5) {
                record("symmetric polytope is isogonal", inst.name, report.isogonal);
                record("symmetric + decomposable means classical", inst.name,
                       !report.p6_holds || report.simplex);
            }
        } else {
            record("decomposability on the ball", inst.name, report.p6_holds);
        }

        if (is_polytope(inst.space)) run_polytope_checks(inst, rng);
        run_metric_checks(inst, rng);
    }

    void run_polytope_checks(const Instance& inst, Rng& rng) {
        const Polytope& p = as_polytope(inst.space);
        const auto group = std::get<FiniteGroup>(automorphism_group(inst.space));
        const State s_m = invariant_state(inst.space);

        // Spanning effects: unit, zero, and one clamped coordinate functional
        // per ambient axis.
        std::vector<Effect> spanning{unit_effect(inst.space), zero_effect(inst.space)};
        for (std::size_t c = 0; c < p.ambient(); ++c) {
            Rational lo = p.vertices[0][c], hi = p.vertices[0][c];
            for (const auto& v : p.vertices) {
                lo = std::min(lo, v[c]);
                hi = std::max(hi, v[c]);
            }
            if (lo == hi) continue;
            Effect e;
            e.a.assign(p.ambient(), Rational(0));
            e.a[c] = 1 / (hi - lo);
            e.b = -lo / (hi - lo);
            spanning.push_back(std::move(e));
        }

        bool duality_ok = true;
        std::vector<State> probes{s_m, sample_mixed_state(p, rng)};
        for (const auto& v : p.vertices) probes.push_back(State{v});
        for (const auto& a : group.elements) {
            const EffectMap phi = dual_map(a.forward);
            duality_ok = duality_ok && phi.apply(unit_effect(inst.space)) == unit_effect(inst.space);
            duality_ok = duality_ok && phi.apply(zero_effect(inst.space)) == zero_effect(inst.space);
            duality_ok = duality_ok && dual_of_effect_map(phi) == a.forward;
            for (const auto& e : spanning) {
                for (const auto& s : probes) {
                    if (phi.apply(e).value(s.x) != e.value(a.forward.apply(s.x))) {
                        duality_ok = false;
                        break;
                    }
                }
            }
        }
        record("dual-map round trip", inst.name, duality_ok,
               std::to_string(group.elements.size()) + " automorphisms");

        // Distance preservation under every automorphism.
        bool preserved = true;
        for (std::size_t t = 0; t < opt_.pairs_per_instance && preserved; ++t) {
            const State s1 = sample_mixed_state(p, rng), s2 = sample_mixed_state(p, rng);
            const Rational d = std::get<Rational>(kolmogorov_distance(inst.space, s1, s2));
            for (const auto& a : group.elements) {
                const Rational d2 = std::get<Rational>(kolmogorov_distance(
                    inst.space, State{a.forward.apply(s1.x)}, State{a.forward.apply(s2.x)}));
                if (d2 != d) {
                    preserved = false;
                    break;
                }
            }
        }
        record("automorphisms preserve distance", inst.name, preserved);

        if (satisfies_p5(p, group)) {
            // Pure states are equidistant from the invariant state.
            Rational common;
            bool first = true, constant = true;
            for (const auto& v : p.vertices) {
                const Rational d =
                    std::get<Rational>(kolmogorov_distance(inst.space, s_m, State{v}));
                if (first) {
                    common = d;
                    first = false;
                } else if (d != common) {
                    constant = false;
                }
            }
            record("pure states equidistant from invariant state", inst.name, constant,
                   constant ? "D=" + to_string(common) : "");

            // Entropy is maximal at the invariant state and automorphism
            // invariant (on supported dimensions).
            try {
                const double s_max = entropy(inst.space, s_m);
                bool ok = true;
                for (std::size_t t = 0; t < opt_.pairs_per_instance && ok; ++t) {
                    const State s = sample_mixed_state(p, rng);
                    const double h = entropy(inst.space, s);
                    ok = h <= s_max + kFloatTol;
                    for (const auto& a : group.elements) {
                        if (!ok) break;
                        ok = std::abs(entropy(inst.space, State{a.forward.apply(s.x)}) - h) <=
                             kFloatTol;
                    }
                }
                record("entropy maximal and invariant", inst.name, ok);
            } catch (const UnsupportedError&) {
                // Ray enumeration capped; skip silently.
            }
        }
    }

    void run_metric_checks(const Instance& inst, Rng& rng) {
        bool identity_ok = true;
        std::string detail;
        for (std::size_t t = 0; t < opt_.pairs_per_instance && identity_ok; ++t) {
            State s1 = sample_state(inst.space, rng);
            State s2 = sample_state(inst.space, rng);
            if (t == 0 && is_polytope(inst.space)) {
                // Guarantee one distinct pair so the fault hook cannot hide.
                s1 = State{as_polytope(inst.space).vertices[0]};
                s2 = State{as_polytope(inst.space).vertices[1]};
            }
            if (is_polytope(inst.space)) {
                const Rational d = std::get<Rational>(kolmogorov_distance(inst.space, s1, s2));
                Rational prob;
                if (opt_.inject_fault) {
                    auto res = lp::solve(success_probability_program(as_polytope(inst.space), s1,
                                                                     s2, /*negate=*/true));
                    prob = -res.optimum;
                } else {
                    prob = std::get<Rational>(optimal_success_probability(inst.space, s1, s2));
                }
                identity_ok = d == 2 * prob - 1;
                if (!identity_ok)
                    detail = "D=" + to_string(d) + " vs 2P-1=" + to_string(2 * prob - 1);
            } else {
                const double d = std::get<double>(kolmogorov_distance(inst.space, s1, s2));
                const double prob =
                    std::get<double>(optimal_success_probability(inst.space, s1, s2));
                identity_ok = std::abs(d - (2 * prob - 1)) <= kFloatTol;
            }
        }
        record("distance equals 2P - 1", inst.name, identity_ok, detail);
    }

    VerifyReport run() {
        Rng corpus_rng(opt_.seed);
        for (const auto& inst : build_corpus(opt_, corpus_rng)) run_instance(inst);
        return std::move(report_);
    }

  private:
    VerifyOptions opt_;
    VerifyReport report_;
};

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(),
                       [](const CheckOutcome& o) { return o.passed; });
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(
        outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return !o.passed; }));
}

VerifyReport run_verification(const VerifyOptions& options) {
    return Runner(options).run();
}

void print_verify_report(const VerifyReport& report, std::ostream& out, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& o : report.outcomes) {
            nlohmann::ordered_json c;
            c["check"] = o.check;
            c["instance"] = o.instance;
            c["passed"] = o.passed;
            if (!o.detail.empty()) c["detail"] = o.detail;
            j["checks"].push_back(std::move(c));
        }
        j["failures"] = report.failures();
        j["all_passed"] = report.all_passed();
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& o : report.outcomes) {
        out << (o.passed ? "[PASS] " : "[FAIL] ") << o.check << " @ " << o.instance;
        if (!o.detail.empty()) out << "  (" << o.detail << ")";
        out << "\n";
    }
    out << (report.all_passed() ? "all checks passed"
                                : std::to_string(report.failures()) + " check(s) failed")
        << "\n";
}

}  // namespace gptlab
