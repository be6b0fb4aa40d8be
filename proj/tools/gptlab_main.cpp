// gptlab: analyze finite-dimensional general probabilistic theories.
//
// Spaces come in as JSON documents (see README), states as comma-separated
// rational coordinates. Exit codes: 0 success, 1 verification failure,
// 2 parse error, 3 unsupported feature, 4 domain error.

#include "gptlab/analysis.hpp"
#include "gptlab/corpus.hpp"
#include "gptlab/discrimination.hpp"
#include "gptlab/errors.hpp"
#include "gptlab/metrics.hpp"
#include "gptlab/space_io.hpp"
#include "gptlab/symmetry.hpp"
#include "gptlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gptlab;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitDomain = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

StateSpace load_space(const std::string& path) {
    return parse_space_document(read_input(path));
}

State load_state(const StateSpace& space, const std::string& text) {
    Vec point = parse_point_text(text);
    if (point.size() != ambient_dimension(space))
        throw ParseError("state has " + std::to_string(point.size()) + " coordinates, space has " +
                         std::to_string(ambient_dimension(space)));
    return make_state(space, std::move(point));
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("GPTLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("GPTLAB_SEED must be an unsigned integer");
        }
    }
    return cli_seed;
}

std::string metric_to_text(const MetricValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
    return std::to_string(std::get<double>(v));
}

nlohmann::ordered_json metric_to_json(const MetricValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return rational_to_json(*r);
    return nlohmann::ordered_json(std::get<double>(v));
}

int cmd_analyze(const std::string& input, std::size_t samples, std::uint64_t seed, bool json_out) {
    const StateSpace space = load_space(input);
    const AnalysisReport report = analyze(space, {samples, effective_seed(seed)});
    if (json_out)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return 0;
}

int cmd_distance(const std::string& input, const std::string& s1_text,
                 const std::string& s2_text, bool json_out) {
    const StateSpace space = load_space(input);
    const State s1 = load_state(space, s1_text), s2 = load_state(space, s2_text);
    const MetricValue d = kolmogorov_distance(space, s1, s2);
    const MetricValue prob = optimal_success_probability(space, s1, s2);
    const double gap = std::abs(metric_as_double(d) - (2 * metric_as_double(prob) - 1));
    const bool identity = is_polytope(space)
                              ? std::get<Rational>(d) == 2 * std::get<Rational>(prob) - 1
                              : gap <= 1e-9;
    if (json_out) {
        nlohmann::ordered_json j;
        j["kolmogorov"] = metric_to_json(d);
        j["success_probability"] = metric_to_json(prob);
        j["identity_d_eq_2p_minus_1"] = identity;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kolmogorov distance    " << metric_to_text(d) << "\n"
                  << "success probability    " << metric_to_text(prob) << "\n"
                  << "D = 2P - 1             " << (identity ? "yes" : "NO") << "\n";
    }
    return identity ? 0 : kExitVerifyFailed;
}

int cmd_distinguish(const std::string& input, const std::vector<std::string>& state_texts,
                    bool json_out) {
    const StateSpace space = load_space(input);
    std::vector<State> states;
    for (const auto& t : state_texts) states.push_back(load_state(space, t));
    const auto witness = distinguish(space, states);
    if (json_out) {
        nlohmann::ordered_json j;
        j["distinguishable"] = witness.has_value();
        if (witness) {
            auto effects = nlohmann::ordered_json::array();
            for (const auto& e : witness->measurement.effects) {
                nlohmann::ordered_json ej;
                ej["a"] = point_to_json(e.a);
                ej["b"] = rational_to_json(e.b);
                effects.push_back(std::move(ej));
            }
            j["measurement"] = std::move(effects);
        }
        std::cout << j.dump(2) << "\n";
    } else if (witness) {
        std::cout << "distinguishable: yes\n";
        for (std::size_t i = 0; i < witness->measurement.effects.size(); ++i) {
            const auto& e = witness->measurement.effects[i];
            std::cout << "  e" << i + 1 << ": a=" << to_string(e.a) << " b=" << to_string(e.b)
                      << "\n";
        }
    } else {
        std::cout << "distinguishable: no\n";
    }
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& state_text, bool convex,
                  bool json_out) {
    const StateSpace space = load_space(input);
    const State s = load_state(space, state_text);
    nlohmann::ordered_json j;
    if (convex) {
        if (!is_polytope(space)) throw UnsupportedError("convex decomposition needs a polytope");
        const auto d = convex_decompose(s.x, as_polytope(space).vertices);
        if (!d) throw std::domain_error("state outside the state space");
        if (json_out) {
            auto terms = nlohmann::ordered_json::array();
            for (const auto& [idx, w] : *d) {
                nlohmann::ordered_json t;
                t["vertex"] = idx;
                t["weight"] = rational_to_json(w);
                terms.push_back(std::move(t));
            }
            j["convex_decomposition"] = std::move(terms);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& [idx, w] : *d)
                std::cout << "vertex " << idx << "  weight " << to_string(w) << "\n";
        }
        return 0;
    }
    const auto d = decompose_distinguishable(space, s);
    if (json_out) {
        j["decomposable"] = d.has_value();
        if (d) {
            auto terms = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < d->weights.size(); ++i) {
                nlohmann::ordered_json t;
                t["state"] = point_to_json(d->witness.states[i].x);
                t["weight"] = rational_to_json(d->weights[i]);
                terms.push_back(std::move(t));
            }
            j["mixture"] = std::move(terms);
        }
        std::cout << j.dump(2) << "\n";
    } else if (d) {
        std::cout << "decomposable into distinguishable pure states: yes\n";
        for (std::size_t i = 0; i < d->weights.size(); ++i)
            std::cout << "  weight " << to_string(d->weights[i]) << "  at "
                      << to_string(d->witness.states[i].x) << "\n";
    } else {
        std::cout << "decomposable into distinguishable pure states: no\n";
    }
    return 0;
}

int cmd_entropy(const std::string& input, const std::string& state_text, bool json_out) {
    const StateSpace space = load_space(input);
    const State s = load_state(space, state_text);
    const double h = entropy(space, s);
    if (json_out) {
        nlohmann::ordered_json j;
        j["entropy"] = h;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "measurement entropy    " << h << "\n";
    }
    return 0;
}

int cmd_symmetry(const std::string& input, const std::string& orbit_text, bool json_out) {
    const StateSpace space = load_space(input);
    const auto group = automorphism_group(space);
    const auto order = group_order(group);
    nlohmann::ordered_json j;
    if (order)
        j["automorphism_group_order"] = *order;
    else
        j["automorphism_group_order"] = "continuous";
    j["satisfies_p5"] = satisfies_p5(space);
    j["is_isogonal"] = is_isogonal(space);
    j["invariant_state"] = point_to_json(invariant_state(space).x);
    j["invariant_state_unique"] = invariant_state_unique(space);
    if (!orbit_text.empty()) {
        const State s = load_state(space, orbit_text);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& o : orbit(space, s)) arr.push_back(point_to_json(o.x));
        j["orbit"] = std::move(arr);
    }
    if (json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group order            "
                  << (order ? std::to_string(*order) : std::string("continuous")) << "\n"
                  << "pure-state equivalence " << (j["satisfies_p5"].get<bool>() ? "yes" : "no")
                  << "\n"
                  << "isogonal               " << (j["is_isogonal"].get<bool>() ? "yes" : "no")
                  << "\n"
                  << "invariant state        " << to_string(invariant_state(space).x) << "\n"
                  << "unique                 "
                  << (j["invariant_state_unique"].get<bool>() ? "yes" : "no") << "\n";
        if (j.contains("orbit"))
            std::cout << "orbit size             " << j["orbit"].size() << "\n";
    }
    return 0;
}

int cmd_verify(VerifyOptions opt, bool json_out) {
    opt.seed = effective_seed(opt.seed);
    const VerifyReport report = run_verification(opt);
    print_verify_report(report, std::cout, json_out);
    return report.all_passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional general probabilistic theories toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    std::string input = "-", s1_text, s2_text, state_text, orbit_text;
    std::vector<std::string> state_texts;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    bool convex = false;
    VerifyOptions vopt;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one space");
    analyze_cmd->add_option("input", input, "space document (file or - for stdin)");
    analyze_cmd->add_option("--samples", samples, "decomposability sample count");
    analyze_cmd->add_option("--seed", seed, "sampling seed");

    auto* distance_cmd = app.add_subcommand("distance", "distance and discrimination probability");
    distance_cmd->add_option("input", input, "space document");
    distance_cmd->add_option("--s1", s1_text, "first state")->required();
    distance_cmd->add_option("--s2", s2_text, "second state")->required();

    auto* distinguish_cmd = app.add_subcommand("distinguish", "single-shot discrimination");
    distinguish_cmd->add_option("input", input, "space document");
    distinguish_cmd->add_option("--state", state_texts, "state (repeatable)")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "mixture of distinguishable pure states");
    decompose_cmd->add_option("input", input, "space document");
    decompose_cmd->add_option("--state", state_text, "state")->required();
    decompose_cmd->add_flag("--convex", convex, "plain convex decomposition over the vertices");

    auto* entropy_cmd = app.add_subcommand("entropy", "measurement entropy of a state");
    entropy_cmd->add_option("input", input, "space document");
    entropy_cmd->add_option("--state", state_text, "state")->required();

    auto* symmetry_cmd = app.add_subcommand("symmetry", "automorphism group summary");
    symmetry_cmd->add_option("input", input, "space document");
    symmetry_cmd->add_option("--orbit", orbit_text, "also list the orbit of this state");

    auto* verify_cmd = app.add_subcommand("verify", "run the instance-check suite");
    verify_cmd->add_option("--seed", vopt.seed, "corpus seed (GPTLAB_SEED overrides)");
    verify_cmd->add_option("--random-polytopes", vopt.random_polytopes, "random non-simplex count");
    verify_cmd->add_option("--random-simplices", vopt.random_simplices, "random simplex count");
    verify_cmd->add_option("--dim-min", vopt.dim_min, "minimum random dimension");
    verify_cmd->add_option("--dim-max", vopt.dim_max, "maximum random dimension");
    verify_cmd->add_option("--vertices-min", vopt.vertices_min, "minimum vertex count");
    verify_cmd->add_option("--vertices-max", vopt.vertices_max, "maximum vertex count");
    verify_cmd->add_option("--samples", vopt.p6_samples, "decomposability sample count");
    verify_cmd->add_flag("--inject-fault", vopt.inject_fault,
                         "negative control: flip the sign of the success-probability program "
                         "and require the run to fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input, samples, seed, json_out);
        if (distance_cmd->parsed()) return cmd_distance(input, s1_text, s2_text, json_out);
        if (distinguish_cmd->parsed()) return cmd_distinguish(input, state_texts, json_out);
        if (decompose_cmd->parsed()) return cmd_decompose(input, state_text, convex, json_out);
        if (entropy_cmd->parsed()) return cmd_entropy(input, state_text, json_out);
        if (symmetry_cmd->parsed()) return cmd_symmetry(input, orbit_text, json_out);
        if (verify_cmd->parsed()) return cmd_verify(vopt, json_out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
