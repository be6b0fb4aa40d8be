#pragma once

#include "gptlab/gpt_core.hpp"
#include "gptlab/rng.hpp"

namespace gptlab {

/// Random full-dimensional polytope: integer candidate vertices reduced to
/// their extreme points, regenerated until the vertex count lands in
/// [min_vertices, max_vertices] (and the result is not a simplex when
/// `non_simplex` is set).
Polytope random_polytope(Rng& rng, std::size_t dim, std::size_t min_vertices,
                         std::size_t max_vertices, bool non_simplex);

/// Random simplex: dim+1 affinely independent integer points.
Polytope random_simplex(Rng& rng, std::size_t dim);

}  // namespace gptlab
