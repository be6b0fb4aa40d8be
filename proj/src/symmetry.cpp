#include "gptlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gptlab {

namespace {

// Affine coordinates of the vertices with respect to a greedy affinely
// independent anchor subset; the search runs in this full-dimensional frame.
struct VertexFrame {
    std::vector<std::size_t> anchor;  // indices, size dim+1
    std::vector<Vec> coords;          // per vertex, length dim
    Mat gram;                         // inertia-form inner products, centered
};

VertexFrame build_frame(const Polytope& p) {
    VertexFrame f;
    const std::size_t n = p.dim;
    f.anchor.push_back(0);
    Mat dirs;
    for (std::size_t i = 1; i < p.vertices.size() && dirs.size() < n; ++i) {
        Mat trial = dirs;
        trial.push_back(linalg::sub(p.vertices[i], p.vertices[0]));
        if (linalg::rank(trial) == trial.size()) {
            dirs = std::move(trial);
            f.anchor.push_back(i);
        }
    }

    // Coordinates: v - w0 = sum_k x_k (w_k - w0), solved exactly.
    Mat basis_cols(p.ambient(), Vec(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < p.ambient(); ++r) basis_cols[r][k] = dirs[k][r];
    for (const auto& v : p.vertices) {
        auto x = linalg::solve(basis_cols, linalg::sub(v, p.vertices[0]));
        if (!x) throw std::logic_error("symmetry: vertex outside its own affine hull");
        f.coords.push_back(std::move(*x));
    }

    if (n == 0) return f;

    // Inertia form of the centered vertex cloud. Any automorphism permutes the
    // vertices and therefore preserves this form, which makes the Gram matrix
    // below a complete invariant for the permutation search.
    Vec centroid(n, Rational(0));
    for (const auto& x : f.coords) centroid = linalg::add(centroid, x);
    centroid = linalg::scale(Rational(1, static_cast<long>(f.coords.size())), centroid);
    Mat inertia(n, Vec(n, Rational(0)));
    for (const auto& x : f.coords) {
        const Vec c = linalg::sub(x, centroid);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inertia[i][j] += c[i] * c[j];
    }
    auto form = linalg::inverse(inertia);
    if (!form) throw std::logic_error("symmetry: inertia form singular");

    const std::size_t nv = f.coords.size();
    f.gram.assign(nv, Vec(nv, Rational(0)));
    for (std::size_t i = 0; i < nv; ++i) {
        const Vec ci = linalg::sub(f.coords[i], centroid);
        const Vec fci = linalg::mat_vec(*form, ci);
        for (std::size_t j = 0; j < nv; ++j)
            f.gram[i][j] = linalg::dot(fci, linalg::sub(f.coords[j], centroid));
    }
    return f;
}

// Depth-first search over vertex images; a partial assignment survives iff
// it matches the Gram matrix on every pair chosen so far. Gram-compatible
// permutations are exactly the automorphism permutations, and ascending
// candidate order yields the elements in lexicographic permutation order.
void search_permutations(const Mat& gram, std::vector<std::size_t>& image,
                         std::vector<bool>& used, std::size_t depth,
                         std::vector<std::vector<std::size_t>>& out) {
    const std::size_t nv = gram.size();
    if (depth == nv) {
        out.push_back(image);
        return;
    }
    for (std::size_t w = 0; w < nv; ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (std::size_t j = 0; j <= depth && ok; ++j) {
            const std::size_t wj = j == depth ? w : image[j];
            ok = gram[w][wj] == gram[depth][j];
        }
        if (!ok) continue;
        image[depth] = w;
        used[w] = true;
        search_permutations(gram, image, used, depth + 1, out);
        used[w] = false;
    }
}

Automorphism build_automorphism(const Polytope& p, const VertexFrame& frame,
                                const std::vector<std::size_t>& perm) {
    auto maps_from = [&](const std::vector<std::size_t>& sigma) {
        std::vector<Vec> sources, images;
        for (auto i : frame.anchor) {
            sources.push_back(p.vertices[i]);
            images.push_back(p.vertices[sigma[i]]);
        }
        auto map = affine_extension(sources, images);
        if (!map) throw std::logic_error("symmetry: candidate has no affine extension");
        return *map;
    };
    std::vector<std::size_t> inv_perm(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv_perm[perm[i]] = i;

    Automorphism a{maps_from(perm), maps_from(inv_perm), perm};
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (a.forward.apply(p.vertices[i]) != p.vertices[perm[i]])
            throw std::logic_error("symmetry: candidate failed vertex verification");
    }
    if (compose(a.forward, a.inverse) != identity_map(p.ambient()))
        throw std::logic_error("symmetry: inverse does not invert");
    return a;
}

FiniteGroup polytope_group(const Polytope& p) {
    FiniteGroup g;
    if (p.vertices.size() == 1) {
        g.elements.push_back(
            Automorphism{identity_map(p.ambient()), identity_map(p.ambient()), {0}});
        return g;
    }
    const VertexFrame frame = build_frame(p);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> image(p.vertices.size());
    std::vector<bool> used(p.vertices.size(), false);
    search_permutations(frame.gram, image, used, 0, perms);
    for (const auto& perm : perms) g.elements.push_back(build_automorphism(p, frame, perm));
    return g;
}

Rational squared_norm(const Vec& v) {
    return linalg::dot(v, v);
}

std::vector<double> to_doubles(const Vec& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}

BallRotationWitness ball_rotation(const Ball& ball, const Vec& target, const Vec& source) {
    const std::size_t d = ball.dim;
    std::vector<std::vector<double>> rot(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) rot[i][i] = 1.0;

    auto u = to_doubles(linalg::sub(source, ball.center));
    auto v = to_doubles(linalg::sub(target, ball.center));
    double nu = 0, nv = 0;
    for (std::size_t i = 0; i < d; ++i) {
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu < 1e-30) return {rot, ball.center};  // both at the center
    nu = std::sqrt(nu);
    nv = std::sqrt(nv);
    for (std::size_t i = 0; i < d; ++i) {
        u[i] /= nu;
        v[i] /= nv;
    }

    if (d == 2) {
        const double c = u[0] * v[0] + u[1] * v[1];
        const double s = u[0] * v[1] - u[1] * v[0];
        rot = {{c, -s}, {s, c}};
        return {rot, ball.center};
    }

    // Rodrigues rotation taking u to v.
    const double c = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    std::vector<double> a{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                          u[0] * v[1] - u[1] * v[0]};
    const double s2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    if (s2 < 1e-24) {
        if (c > 0) return {rot, ball.center};  // identical directions
        // Half turn about any axis orthogonal to u.
        std::vector<double> p{-u[1], u[0], 0.0};
        double np = std::sqrt(p[0] * p[0] + p[1] * p[1]);
        if (np < 1e-12) p = {1.0, 0.0, 0.0}, np = 1.0;
        for (auto& x : p) x /= np;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) rot[i][j] = 2 * p[i] * p[j] - (i == j ? 1.0 : 0.0);
        return {rot, ball.center};
    }
    const double k = (1 - c) / s2;
    const std::vector<std::vector<double>> ax{{0, -a[2], a[1]}, {a[2], 0, -a[0]}, {-a[1], a[0], 0}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double ax2 = 0;
            for (std::size_t m = 0; m < 3; ++m) ax2 += ax[i][m] * ax[m][j];
            rot[i][j] = (i == j ? 1.0 : 0.0) + ax[i][j] + k * ax2;
        }
    }
    return {rot, ball.center};
}

}  // namespace

AutomorphismGroup automorphism_group(const StateSpace& space) {
    if (is_ball(space)) {
        const Ball& b = as_ball(space);
        return BallOrthogonal{b.dim, b.center};
    }
    return polytope_group(as_polytope(space));
}

std::optional<std::size_t> group_order(const AutomorphismGroup& group) {
    if (const auto* fin = std::get_if<FiniteGroup>(&group)) return fin->elements.size();
    return std::nullopt;
}

bool satisfies_p5(const Polytope& polytope, const FiniteGroup& group) {
    std::vector<bool> hit(polytope.vertices.size(), false);
    for (const auto& a : group.elements) hit[a.vertex_permutation[0]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool satisfies_p5(const StateSpace& space) {
    if (is_ball(space)) return true;
    const Polytope& p = as_polytope(space);
    return satisfies_p5(p, std::get<FiniteGroup>(automorphism_group(space)));
}

std::optional<Automorphism> are_equivalent(const Polytope& polytope, const FiniteGroup& group,
                                           const State& s1, const State& s2) {
    (void)polytope;
    for (const auto& a : group.elements) {
        if (a.forward.apply(s2.x) == s1.x) return a;
    }
    return std::nullopt;
}

std::optional<EquivalenceWitness> are_equivalent(const StateSpace& space, const State& s1,
                                                 const State& s2) {
    if (!space_contains(space, s1.x) || !space_contains(space, s2.x))
        throw std::domain_error("are_equivalent: state outside the state space");
    if (is_polytope(space)) {
        const Polytope& p = as_polytope(space);
        auto a = are_equivalent(p, std::get<FiniteGroup>(automorphism_group(space)), s1, s2);
        if (!a) return std::nullopt;
        return EquivalenceWitness{std::move(*a)};
    }
    const Ball& ball = as_ball(space);
    if (squared_norm(linalg::sub(s1.x, ball.center)) !=
        squared_norm(linalg::sub(s2.x, ball.center)))
        return std::nullopt;
    return EquivalenceWitness{ball_rotation(ball, s1.x, s2.x)};
}

State invariant_state(const StateSpace& space) {
    if (is_ball(space)) return State{as_ball(space).center};
    const Polytope& p = as_polytope(space);
    Vec avg(p.ambient(), Rational(0));
    for (const auto& v : p.vertices) avg = linalg::add(avg, v);
    avg = linalg::scale(Rational(1, static_cast<long>(p.vertices.size())), avg);
    const auto group = std::get<FiniteGroup>(automorphism_group(space));
    for (const auto& a : group.elements) {
        if (a.forward.apply(avg) != avg)
            throw std::logic_error("invariant_state: vertex average not fixed by the group");
    }
    return State{avg};
}

bool invariant_state_unique(const Polytope& polytope, const FiniteGroup& group) {
    const std::size_t n = polytope.dim;
    if (n == 0) return true;
    // Fixed points of g solve (A_g - I) x = -t_g; the invariant state is in
    // the relative interior, so uniqueness fails exactly when the stacked
    // kernel still contains a direction of the affine hull.
    Mat dirs;  // columns: spanning directions of the hull
    {
        Mat rows;
        for (std::size_t i = 1; i < polytope.vertices.size() && rows.size() < n; ++i) {
            Mat trial = rows;
            trial.push_back(linalg::sub(polytope.vertices[i], polytope.vertices[0]));
            if (linalg::rank(trial) == trial.size()) rows = std::move(trial);
        }
        dirs.assign(polytope.ambient(), Vec(n, Rational(0)));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < polytope.ambient(); ++r) dirs[r][k] = rows[k][r];
    }
    Mat stacked;
    for (const auto& a : group.elements) {
        Mat diff = a.forward.linear;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i][i] -= 1;
        const Mat restricted = linalg::mat_mul(diff, dirs);  // action on hull directions
        for (const auto& row : restricted) stacked.push_back(row);
    }
    if (stacked.empty()) return false;
    return linalg::rank(stacked) == n;
}

bool invariant_state_unique(const StateSpace& space) {
    if (is_ball(space)) return true;
    const Polytope& p = as_polytope(space);
    return invariant_state_unique(p, std::get<FiniteGroup>(automorphism_group(space)));
}

Mat invariant_inner_product(const Polytope& polytope, const FiniteGroup& group) {
    const std::size_t d = polytope.ambient();
    Mat sum(d, Vec(d, Rational(0)));
    for (const auto& a : group.elements) {
        const Mat gram = linalg::mat_mul(linalg::transpose(a.forward.linear), a.forward.linear);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sum[i][j] += gram[i][j];
    }
    const Rational inv = Rational(1, static_cast<long>(group.elements.size()));
    for (auto& row : sum)
        for (auto& v : row) v *= inv;
    for (const auto& a : group.elements) {
        const Mat conj = linalg::mat_mul(linalg::transpose(a.forward.linear),
                                         linalg::mat_mul(sum, a.forward.linear));
        if (conj != sum) throw std::logic_error("invariant form not preserved by the group");
    }
    return sum;
}

Mat invariant_inner_product(const StateSpace& space) {
    if (is_ball(space)) return linalg::identity(as_ball(space).dim);
    const Polytope& p = as_polytope(space);
    return invariant_inner_product(p, std::get<FiniteGroup>(automorphism_group(space)));
}

bool is_isogonal(const Polytope& polytope, const FiniteGroup& group) {
    if (!satisfies_p5(polytope, group)) return false;
    invariant_inner_product(polytope, group);  // asserts metric preservation
    return true;
}

bool is_isogonal(const StateSpace& space) {
    if (is_ball(space)) return true;
    const Polytope& p = as_polytope(space);
    return is_isogonal(p, std::get<FiniteGroup>(automorphism_group(space)));
}

std::vector<State> orbit(const Polytope& polytope, const FiniteGroup& group, const State& s) {
    (void)polytope;
    std::vector<State> result;
    for (const auto& a : group.elements) {
        State image{a.forward.apply(s.x)};
        if (std::find(result.begin(), result.end(), image) == result.end())
            result.push_back(std::move(image));
    }
    return result;
}

std::vector<State> orbit(const StateSpace& space, const State& s) {
    if (is_ball(space)) throw std::invalid_argument("orbit: not enumerable on a ball");
    if (!space_contains(space, s.x)) throw std::domain_error("orbit: state outside the space");
    const Polytope& p = as_polytope(space);
    return orbit(p, std::get<FiniteGroup>(automorphism_group(space)), s);
}

}  // namespace gptlab
