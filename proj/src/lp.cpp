#include "gptlab/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gptlab::lp {

namespace {

// Internal standard form: maximize <cost, y> subject to T y = rhs, y >= 0,
// rhs >= 0. Original variables map onto y via shifts or sign splits.
enum class VarKind { ShiftLower, ShiftUpper, Split };

struct VarMap {
    VarKind kind;
    std::size_t col;    // first y column of this variable
    Rational shift;     // x = shift + y (ShiftLower), x = shift - y (ShiftUpper)
};

struct Tableau {
    std::vector<Vec> rows;       // m x (n+1), last column is the rhs
    std::vector<std::size_t> basis;  // basic column per row
    std::size_t cols = 0;        // n, excluding rhs

    Rational& at(std::size_t r, std::size_t c) { return rows[r][c]; }
    Rational& rhs(std::size_t r) { return rows[r][cols]; }

    void pivot(std::size_t r, std::size_t c) {
        Vec& prow = rows[r];
        const Rational inv = 1 / prow[c];
        for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = rows[i][c];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * prow[j];
        }
        basis[r] = c;
    }
};

// Runs the simplex loop on the given objective (maximize). `allowed` marks
// columns eligible to enter. Returns false when unbounded.
bool run_simplex(Tableau& t, Vec& obj, Rational& obj_value) {
    for (;;) {
        // Bland: entering column = smallest index with a positive reduced cost.
        std::size_t enter = t.cols;
        for (std::size_t j = 0; j < t.cols; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == t.cols) return true;  // optimal

        // Ratio test; ties broken by smallest basic variable index (Bland).
        std::size_t leave = t.rows.size();
        Rational best_ratio;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const Rational& a = t.at(i, enter);
            if (a <= 0) continue;
            Rational ratio = t.rhs(i) / a;
            if (leave == t.rows.size() || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == t.rows.size()) return false;  // unbounded

        t.pivot(leave, enter);
        // Update the reduced-cost row against the new pivot row.
        const Rational f = obj[enter];
        if (f != 0) {
            const Vec& prow = t.rows[leave];
            for (std::size_t j = 0; j < t.cols; ++j) obj[j] -= f * prow[j];
            obj_value += f * prow[t.cols];
        }
    }
}

void check_shape(const LinearProgram& p) {
    if (!p.objective.empty() && p.objective.size() != p.num_vars)
        throw std::invalid_argument("lp: objective length does not match num_vars");
    if (!p.bounds.empty() && p.bounds.size() != p.num_vars)
        throw std::invalid_argument("lp: bounds length does not match num_vars");
    for (const auto& c : p.constraints) {
        if (c.coeffs.size() != p.num_vars)
            throw std::invalid_argument("lp: constraint length does not match num_vars");
    }
}

bool satisfies(const LinearProgram& p, const Vec& x) {
    for (const auto& c : p.constraints) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < p.num_vars; ++j) lhs += c.coeffs[j] * x[j];
        switch (c.rel) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    if (!p.bounds.empty()) {
        for (std::size_t j = 0; j < p.num_vars; ++j) {
            if (p.bounds[j].lower && x[j] < *p.bounds[j].lower) return false;
            if (p.bounds[j].upper && x[j] > *p.bounds[j].upper) return false;
        }
    }
    return true;
}

}  // namespace

LPResult solve(const LinearProgram& program) {
    check_shape(program);
    const std::size_t n = program.num_vars;

    // Map each original variable onto nonnegative y columns.
    std::vector<VarMap> vmap(n);
    std::size_t ycols = 0;
    std::vector<Constraint> rows = program.constraints;
    for (std::size_t j = 0; j < n; ++j) {
        VarBounds b = program.bounds.empty() ? VarBounds{} : program.bounds[j];
        if (b.lower) {
            vmap[j] = {VarKind::ShiftLower, ycols++, *b.lower};
            if (b.upper) {
                // y_j <= upper - lower as an explicit row.
                Constraint c;
                c.coeffs.assign(n, Rational(0));
                c.coeffs[j] = 1;
                c.rel = Relation::LessEq;
                c.rhs = *b.upper;
                rows.push_back(std::move(c));
            }
        } else if (b.upper) {
            vmap[j] = {VarKind::ShiftUpper, ycols++, *b.upper};
        } else {
            vmap[j] = {VarKind::Split, ycols, Rational(0)};
            ycols += 2;
        }
    }

    // Express a row over y columns; constant terms move to the rhs.
    const std::size_t m = rows.size();
    std::vector<Vec> ycoef(m, Vec(ycols, Rational(0)));
    Vec yrhs(m, Rational(0));
    std::vector<Relation> yrel(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational rhs = rows[i].rhs;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = rows[i].coeffs[j];
            if (a == 0) continue;
            switch (vmap[j].kind) {
                case VarKind::ShiftLower:
                    ycoef[i][vmap[j].col] += a;
                    rhs -= a * vmap[j].shift;
                    break;
                case VarKind::ShiftUpper:
                    ycoef[i][vmap[j].col] -= a;
                    rhs -= a * vmap[j].shift;
                    break;
                case VarKind::Split:
                    ycoef[i][vmap[j].col] += a;
                    ycoef[i][vmap[j].col + 1] -= a;
                    break;
            }
        }
        yrel[i] = rows[i].rel;
        // Normalize to nonnegative rhs.
        if (rhs < 0) {
            for (auto& v : ycoef[i]) v = -v;
            rhs = -rhs;
            if (yrel[i] == Relation::LessEq)
                yrel[i] = Relation::GreaterEq;
            else if (yrel[i] == Relation::GreaterEq)
                yrel[i] = Relation::LessEq;
        }
        yrhs[i] = rhs;
    }

    // Slack columns for inequalities; artificials where no slack can start
    // in the basis (equalities and >= rows).
    std::size_t slacks = 0, artificials = 0;
    for (auto r : yrel) {
        if (r != Relation::Equal) ++slacks;
        if (r != Relation::LessEq) ++artificials;
    }
    const std::size_t total = ycols + slacks + artificials;

    Tableau t;
    t.cols = total;
    t.rows.assign(m, Vec(total + 1, Rational(0)));
    t.basis.assign(m, 0);
    std::vector<std::size_t> art_cols;
    std::size_t scol = ycols, acol = ycols + slacks;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < ycols; ++j) t.at(i, j) = ycoef[i][j];
        t.rhs(i) = yrhs[i];
        switch (yrel[i]) {
            case Relation::LessEq:
                t.at(i, scol) = 1;
                t.basis[i] = scol++;
                break;
            case Relation::GreaterEq:
                t.at(i, scol) = -1;
                ++scol;
                t.at(i, acol) = 1;
                t.basis[i] = acol;
                art_cols.push_back(acol++);
                break;
            case Relation::Equal:
                t.at(i, acol) = 1;
                t.basis[i] = acol;
                art_cols.push_back(acol++);
                break;
        }
    }

    // Phase one: maximize -(sum of artificials).
    if (!art_cols.empty()) {
        Vec obj(total, Rational(0));
        for (auto c : art_cols) obj[c] = -1;
        Rational value = 0;
        // Price out the artificial basis.
        for (std::size_t i = 0; i < m; ++i) {
            if (obj[t.basis[i]] != 0) {
                const Rational f = obj[t.basis[i]];
                for (std::size_t j = 0; j < total; ++j) obj[j] -= f * t.at(i, j);
                value += f * t.rhs(i);
            }
        }
        run_simplex(t, obj, value);  // bounded by construction
        if (value != 0) return {Status::Infeasible, Rational(0), {}};

        // Pivot leftover zero-valued artificials out of the basis, or drop
        // their rows when redundant.
        for (std::size_t i = 0; i < t.rows.size();) {
            const std::size_t b = t.basis[i];
            const bool is_art = b >= ycols + slacks;
            if (!is_art) {
                ++i;
                continue;
            }
            std::size_t enter = total;
            for (std::size_t j = 0; j < ycols + slacks; ++j) {
                if (t.at(i, j) != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == total) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                t.pivot(i, enter);
                ++i;
            }
        }
    }

    // Drop artificial columns for phase two.
    const std::size_t phase2_cols = ycols + slacks;
    for (auto& row : t.rows) {
        row.erase(row.begin() + static_cast<std::ptrdiff_t>(phase2_cols),
                  row.begin() + static_cast<std::ptrdiff_t>(total));
    }
    t.cols = phase2_cols;

    // Phase two objective in y space.
    Vec obj(phase2_cols, Rational(0));
    if (!program.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& c = program.objective[j];
            if (c == 0) continue;
            switch (vmap[j].kind) {
                case VarKind::ShiftLower:
                    obj[vmap[j].col] += c;
                    break;
                case VarKind::ShiftUpper:
                    obj[vmap[j].col] -= c;
                    break;
                case VarKind::Split:
                    obj[vmap[j].col] += c;
                    obj[vmap[j].col + 1] -= c;
                    break;
            }
        }
    }
    Rational value = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (obj[t.basis[i]] != 0) {
            const Rational f = obj[t.basis[i]];
            for (std::size_t j = 0; j < t.cols; ++j) obj[j] -= f * t.at(i, j);
            value += f * t.rhs(i);
        }
    }
    if (!run_simplex(t, obj, value)) return {Status::Unbounded, Rational(0), {}};

    // Recover y, then x.
    Vec y(phase2_cols, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < phase2_cols) y[t.basis[i]] = t.rhs(i);
    }
    Vec x(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        switch (vmap[j].kind) {
            case VarKind::ShiftLower:
                x[j] = vmap[j].shift + y[vmap[j].col];
                break;
            case VarKind::ShiftUpper:
                x[j] = vmap[j].shift - y[vmap[j].col];
                break;
            case VarKind::Split:
                x[j] = y[vmap[j].col] - y[vmap[j].col + 1];
                break;
        }
    }

    if (!satisfies(program, x))
        throw std::logic_error("lp: internal error, solution failed exact verification");

    Rational optimum = 0;
    if (!program.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) optimum += program.objective[j] * x[j];
    }
    return {Status::Optimal, optimum, std::move(x)};
}

std::optional<Vec> feasible_point(std::size_t num_vars, const std::vector<Constraint>& constraints,
                                  const std::vector<VarBounds>& bounds) {
    LinearProgram p;
    p.num_vars = num_vars;
    p.constraints = constraints;
    p.bounds = bounds;
    LPResult r = solve(p);
    if (r.status != Status::Optimal) return std::nullopt;
    return std::move(r.point);
}

}  // namespace gptlab::lp
