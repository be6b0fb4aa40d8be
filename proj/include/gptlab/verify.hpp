#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gptlab {

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t random_polytopes = 20;
    std::size_t random_simplices = 8;
    std::size_t dim_min = 2;
    std::size_t dim_max = 3;
    std::size_t vertices_min = 4;
    std::size_t vertices_max = 8;
    std::size_t p6_samples = 1000;
    std::size_t pairs_per_instance = 5;
    /// Negative-control hook: swaps the success-probability program for a
    /// sign-flipped variant, which must make the distance identity check
    /// fail and the run exit nonzero.
    bool inject_fault = false;
};

struct CheckOutcome {
    std::string check;
    std::string instance;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckOutcome> outcomes;

    bool all_passed() const;
    std::size_t failures() const;
};

/// Runs the instance checks (distinguishability bounds and their equality
/// case, decomposability classification, equivalence/dual round trips,
/// distance invariance and equidistance, entropy maximality, and the
/// distance-success identity) over built-in and seeded random spaces.
VerifyReport run_verification(const VerifyOptions& options);

void print_verify_report(const VerifyReport& report, std::ostream& out, bool json);

}  // namespace gptlab
