#include "gptlab/corpus.hpp"

#include "gptlab/discrimination.hpp"

#include <stdexcept>

namespace gptlab {

namespace {

Vec random_point(Rng& rng, std::size_t dim) {
    Vec v(dim);
    for (auto& c : v) c = Rational(rng.int_in(-9, 9));
    return v;
}

}  // namespace

Polytope random_polytope(Rng& rng, std::size_t dim, std::size_t min_vertices,
                         std::size_t max_vertices, bool non_simplex) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<Vec> candidates;
        const std::size_t count = max_vertices + 2;
        for (std::size_t i = 0; i < count; ++i) candidates.push_back(random_point(rng, dim));
        StateSpace space;
        try {
            space = make_polytope(std::move(candidates));
        } catch (const std::invalid_argument&) {
            continue;
        }
        const Polytope& p = as_polytope(space);
        if (p.dim != dim) continue;
        if (p.vertices.size() < min_vertices || p.vertices.size() > max_vertices) continue;
        if (non_simplex && is_simplex(space)) continue;
        return p;
    }
    throw std::runtime_error("corpus: failed to generate a polytope with the requested shape");
}

Polytope random_simplex(Rng& rng, std::size_t dim) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<Vec> candidates;
        for (std::size_t i = 0; i <= dim; ++i) candidates.push_back(random_point(rng, dim));
        if (!is_affinely_independent(candidates)) continue;
        return as_polytope(make_polytope(std::move(candidates)));
    }
    throw std::runtime_error("corpus: failed to generate a simplex");
}

}  // namespace gptlab
