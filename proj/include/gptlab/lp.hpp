#pragma once

#include "gptlab/rational.hpp"

#include <optional>
#include <vector>

namespace gptlab::lp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
    Vec coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

struct VarBounds {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// Maximization problem over rationals. Variables are free unless bounds
/// are given; `bounds` is either empty or has one entry per variable.
struct LinearProgram {
    std::size_t num_vars = 0;
    Vec objective;  // maximize <objective, x>; all-zero means pure feasibility
    std::vector<Constraint> constraints;
    std::vector<VarBounds> bounds;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct LPResult {
    Status status = Status::Infeasible;
    Rational optimum;  // meaningful when Optimal
    Vec point;         // meaningful when Optimal; satisfies every constraint exactly
};

/// Exact two-phase simplex with Bland's anti-cycling pivot rule. The
/// returned point is re-substituted into every constraint before return;
/// results are deterministic for identical inputs.
LPResult solve(const LinearProgram& program);

/// Phase one only: an exact feasible point, or nothing.
std::optional<Vec> feasible_point(std::size_t num_vars, const std::vector<Constraint>& constraints,
                                  const std::vector<VarBounds>& bounds = {});

}  // namespace gptlab::lp
