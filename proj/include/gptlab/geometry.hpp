#pragma once

#include "gptlab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gptlab {

// ---------------------------------------------------------------------------
// Exact rational linear algebra
// ---------------------------------------------------------------------------

namespace linalg {

Mat identity(std::size_t n);
Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

std::size_t rank(Mat m);

/// One exact solution of A x = b with free variables fixed to zero, or
/// nothing when the system is inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

/// Gauss-Jordan inverse; nothing when singular.
std::optional<Mat> inverse(const Mat& a);

/// Basis of the kernel of A, one vector per free column.
std::vector<Vec> null_space(Mat a);

}  // namespace linalg

// ---------------------------------------------------------------------------
// Affine maps and convex-geometry primitives
// ---------------------------------------------------------------------------

/// s |-> linear * s + translation, evaluated exactly.
struct AffineMap {
    Mat linear;
    Vec translation;

    Vec apply(const Vec& point) const;
    bool operator==(const AffineMap&) const = default;
};

AffineMap identity_map(std::size_t dim);
AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g

/// Dimension of the affine hull of the points.
std::size_t affine_dimension(const std::vector<Vec>& points);

bool is_affinely_independent(const std::vector<Vec>& points);

/// Minimal sublist whose convex hull equals the hull of the input. Points
/// are tested in input order; a point is dropped iff it is a convex
/// combination of the remaining ones (exact LP feasibility).
std::vector<Vec> extreme_points(std::vector<Vec> points);

/// Exact convex weights over `generators` reconstructing `target`, or
/// nothing when the target is outside the hull. The solution is a basic
/// feasible one, so its support has at most dim+1 entries; callers must not
/// rely on any particular decomposition.
std::optional<std::vector<std::pair<std::size_t, Rational>>> convex_decompose(
    const Vec& target, const std::vector<Vec>& generators);

/// Affine map with map(sources[i]) == images[i] for all i, or nothing when
/// the images violate an affine dependency of the sources. When the sources
/// do not span the ambient space, the map acts as the identity on a
/// deterministic complement basis.
std::optional<AffineMap> affine_extension(const std::vector<Vec>& sources,
                                          const std::vector<Vec>& images);

}  // namespace gptlab
