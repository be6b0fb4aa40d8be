#include "gptlab/analysis.hpp"

#include "gptlab/discrimination.hpp"
#include "gptlab/errors.hpp"
#include "gptlab/metrics.hpp"
#include "gptlab/space_io.hpp"
#include "gptlab/symmetry.hpp"

#include <sstream>

namespace gptlab {

AnalysisReport analyze(const StateSpace& space, const AnalysisOptions& options) {
    AnalysisReport r;
    r.dim = space_dimension(space);
    r.simplex = is_simplex(space);
    r.max_distinguishable = max_distinguishable(space);
    r.invariant_state = invariant_state(space).x;

    if (is_polytope(space)) {
        const Polytope& p = as_polytope(space);
        r.num_pure_states = p.vertices.size();
        const auto group = std::get<FiniteGroup>(automorphism_group(space));
        r.automorphism_group_order = group.elements.size();
        r.p5 = satisfies_p5(p, group);
        r.isogonal = is_isogonal(p, group);
        r.invariant_state_unique = invariant_state_unique(p, group);
    } else {
        r.num_pure_states = std::nullopt;
        r.automorphism_group_order = std::nullopt;
        r.p5 = true;
        r.isogonal = true;
        r.invariant_state_unique = true;
    }

    const P6Result p6 = satisfies_p6_sampled(space, options.p6_samples, options.seed);
    r.p6_holds = p6.holds;
    if (p6.counterexample) r.p6_counterexample = p6.counterexample->x;

    try {
        r.invariant_state_entropy = entropy(space, State{r.invariant_state});
    } catch (const UnsupportedError&) {
        r.invariant_state_entropy = std::nullopt;
    }

    if (r.simplex)
        r.classification = "classical";
    else if (is_ball(space))
        r.classification = "qubit-like-ball";
    else
        r.classification = "other";
    return r;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["dim"] = r.dim;
    if (r.num_pure_states)
        j["num_pure_states"] = *r.num_pure_states;
    else
        j["num_pure_states"] = "infinite";
    j["is_simplex"] = r.simplex;
    j["c"] = r.max_distinguishable;
    j["satisfies_p5"] = r.p5;
    j["is_isogonal"] = r.isogonal;
    j["p6"]["status"] = r.p6_holds ? "holds" : "fails";
    if (r.p6_counterexample) j["p6"]["counterexample"] = point_to_json(*r.p6_counterexample);
    j["invariant_state"] = point_to_json(r.invariant_state);
    j["invariant_state_unique"] = r.invariant_state_unique;
    if (r.automorphism_group_order)
        j["automorphism_group_order"] = *r.automorphism_group_order;
    else
        j["automorphism_group_order"] = "continuous";
    if (r.invariant_state_entropy)
        j["invariant_state_entropy"] = *r.invariant_state_entropy;
    else
        j["invariant_state_entropy"] = nullptr;
    j["classification_tag"] = r.classification;
    return j;
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto line = [&](const char* key, const std::string& value) {
        out << key << std::string(28 - std::string(key).size(), ' ') << value << "\n";
    };
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    line("dim", std::to_string(r.dim));
    line("pure states",
         r.num_pure_states ? std::to_string(*r.num_pure_states) : std::string("infinite"));
    line("simplex", yn(r.simplex));
    line("max distinguishable (c)", std::to_string(r.max_distinguishable));
    line("pure-state equivalence", yn(r.p5));
    line("isogonal", yn(r.isogonal));
    if (r.p6_holds) {
        line("distinguishable decomp.", "holds");
    } else {
        line("distinguishable decomp.",
             "fails at " + (r.p6_counterexample ? to_string(*r.p6_counterexample)
                                                : std::string("(unknown)")));
    }
    line("invariant state", to_string(r.invariant_state));
    line("invariant state unique", yn(r.invariant_state_unique));
    line("automorphism group order", r.automorphism_group_order
                                         ? std::to_string(*r.automorphism_group_order)
                                         : std::string("continuous"));
    if (r.invariant_state_entropy)
        line("entropy of invariant state", std::to_string(*r.invariant_state_entropy));
    else
        line("entropy of invariant state", "unsupported");
    line("classification", r.classification);
    return out.str();
}

}  // namespace gptlab
