#include "gptlab/geometry.hpp"

#include "gptlab/lp.hpp"

#include <stdexcept>

namespace gptlab {

namespace linalg {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat r(a.size(), Vec(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

namespace {

// Row echelon reduction; returns pivot columns. Mutates `m` in place.
std::vector<std::size_t> echelon(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Mat m) {
    return echelon(m).size();
}

std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    // A pivot in the augmented column means inconsistency.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    const std::size_t n = a.size();
    Mat aug(n, Vec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vec> null_space(Mat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace linalg

// ---------------------------------------------------------------------------

Vec AffineMap::apply(const Vec& point) const {
    return linalg::add(linalg::mat_vec(linear, point), translation);
}

AffineMap identity_map(std::size_t dim) {
    return {linalg::identity(dim), Vec(dim, Rational(0))};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return {linalg::mat_mul(f.linear, g.linear),
            linalg::add(linalg::mat_vec(f.linear, g.translation), f.translation)};
}

namespace {

void check_points(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("geometry: empty point list");
    for (const auto& p : points) {
        if (p.size() != points[0].size())
            throw std::invalid_argument("geometry: mixed point dimensions");
    }
}

Mat difference_rows(const std::vector<Vec>& points) {
    Mat rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
        rows.push_back(linalg::sub(points[i], points[0]));
    return rows;
}

// Membership of `target` in the convex hull of `generators`, with weights.
std::optional<Vec> hull_weights(const Vec& target, const std::vector<Vec>& generators) {
    const std::size_t k = generators.size();
    const std::size_t d = target.size();
    std::vector<lp::Constraint> cons;
    cons.reserve(d + 1);
    for (std::size_t c = 0; c < d; ++c) {
        lp::Constraint row;
        row.coeffs.resize(k);
        for (std::size_t j = 0; j < k; ++j) row.coeffs[j] = generators[j][c];
        row.rel = lp::Relation::Equal;
        row.rhs = target[c];
        cons.push_back(std::move(row));
    }
    lp::Constraint unit;
    unit.coeffs.assign(k, Rational(1));
    unit.rel = lp::Relation::Equal;
    unit.rhs = 1;
    cons.push_back(std::move(unit));
    std::vector<lp::VarBounds> bounds(k, lp::VarBounds{Rational(0), std::nullopt});
    return lp::feasible_point(k, cons, bounds);
}

}  // namespace

std::size_t affine_dimension(const std::vector<Vec>& points) {
    check_points(points);
    if (points.size() == 1) return 0;
    return linalg::rank(difference_rows(points));
}

bool is_affinely_independent(const std::vector<Vec>& points) {
    check_points(points);
    return affine_dimension(points) == points.size() - 1;
}

std::vector<Vec> extreme_points(std::vector<Vec> points) {
    check_points(points);
    std::size_t i = 0;
    while (i < points.size() && points.size() > 1) {
        std::vector<Vec> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (hull_weights(points[i], others)) {
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return points;
}

std::optional<std::vector<std::pair<std::size_t, Rational>>> convex_decompose(
    const Vec& target, const std::vector<Vec>& generators) {
    check_points(generators);
    if (target.size() != generators[0].size())
        throw std::invalid_argument("geometry: target dimension mismatch");
    auto weights = hull_weights(target, generators);
    if (!weights) return std::nullopt;
    std::vector<std::pair<std::size_t, Rational>> result;
    for (std::size_t j = 0; j < weights->size(); ++j) {
        if ((*weights)[j] != 0) result.emplace_back(j, (*weights)[j]);
    }
    return result;
}

std::optional<AffineMap> affine_extension(const std::vector<Vec>& sources,
                                          const std::vector<Vec>& images) {
    check_points(sources);
    check_points(images);
    if (sources.size() != images.size())
        throw std::invalid_argument("geometry: sources/images length mismatch");
    const std::size_t d_in = sources[0].size();
    const std::size_t d_out = images[0].size();

    // Greedy affinely independent anchor subset of the sources.
    std::vector<std::size_t> anchor{0};
    Mat dirs;  // rows: anchor[k] - anchor[0]
    for (std::size_t i = 1; i < sources.size() && dirs.size() < d_in; ++i) {
        Mat trial = dirs;
        trial.push_back(linalg::sub(sources[i], sources[0]));
        if (linalg::rank(trial) == trial.size()) {
            dirs = std::move(trial);
            anchor.push_back(i);
        }
    }

    // Complete with standard basis vectors; those directions act as the
    // identity (or as zero when the codomain differs).
    Mat basis_cols = dirs;  // will hold the chosen basis as rows for rank tests
    std::vector<std::size_t> completion;
    for (std::size_t j = 0; j < d_in && basis_cols.size() < d_in; ++j) {
        Mat trial = basis_cols;
        Vec e(d_in, Rational(0));
        e[j] = 1;
        trial.push_back(std::move(e));
        if (linalg::rank(trial) == trial.size()) {
            basis_cols = std::move(trial);
            completion.push_back(j);
        }
    }

    // Solve A * B = R column-wise: A = R * B^{-1}, with B the basis matrix.
    Mat b_mat(d_in, Vec(d_in, Rational(0)));  // columns are basis vectors
    Mat r_mat(d_out, Vec(d_in, Rational(0)));
    for (std::size_t k = 1; k < anchor.size(); ++k) {
        const Vec dir = linalg::sub(sources[anchor[k]], sources[anchor[0]]);
        const Vec img = linalg::sub(images[anchor[k]], images[anchor[0]]);
        for (std::size_t i = 0; i < d_in; ++i) b_mat[i][k - 1] = dir[i];
        for (std::size_t i = 0; i < d_out; ++i) r_mat[i][k - 1] = img[i];
    }
    for (std::size_t c = 0; c < completion.size(); ++c) {
        const std::size_t col = anchor.size() - 1 + c;
        b_mat[completion[c]][col] = 1;
        if (d_in == d_out) r_mat[completion[c]][col] = 1;
    }
    auto b_inv = linalg::inverse(b_mat);
    if (!b_inv) throw std::logic_error("geometry: anchor basis not invertible");
    Mat a = linalg::mat_mul(r_mat, *b_inv);
    Vec t = linalg::sub(images[anchor[0]], linalg::mat_vec(a, sources[anchor[0]]));
    AffineMap map{std::move(a), std::move(t)};

    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (map.apply(sources[i]) != images[i]) return std::nullopt;
    }
    return map;
}

}  // namespace gptlab
