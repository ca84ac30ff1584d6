#pragma once

/**
 * Decisions and certificates for representability in dimensions 1 and 2.
 *
 * Dimension 1 follows the Lekkerkerker–Boland characterization: K is
 * 1-representable iff it is a clique complex whose 1-skeleton has no induced
 * cycle of length >= 4 and no asteroidal triple. Dimension 2 is decided when
 * the dual is a graph, by planarity of that graph.
 */

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drep/complex.hpp"
#include "drep/geometry.hpp"
#include "drep/graph.hpp"
#include "drep/planarity.hpp"

namespace drep {

// ------------------------------------------------------------- obstructions

enum class ObstructionKind { NonClique, InducedCycle, AsteroidalTriple };

inline const char* obstruction_name(ObstructionKind k)
{
    switch (k) {
    case ObstructionKind::NonClique: return "NonClique";
    case ObstructionKind::InducedCycle: return "InducedCycle";
    case ObstructionKind::AsteroidalTriple: return "AsteroidalTriple";
    }
    return "?";
}

/// `vertices` holds the non-face, the cycle, or the triple (u, v, w). For a
/// triple, `paths` run u→v, u→w, v→w, each avoiding the closed neighborhood
/// of the remaining vertex.
struct Obstruction1 {
    ObstructionKind kind = ObstructionKind::NonClique;
    std::vector<int> vertices;
    std::array<std::vector<int>, 3> paths;
};

namespace detail {

inline std::vector<bool> outside_closed_neighborhood(const Graph& G, int v)
{
    std::vector<bool> allowed(G.n, true);
    allowed[v] = false;
    for (int u : G.adj[v])
        allowed[u] = false;
    return allowed;
}

inline bool valid_path(const Graph& G, const std::vector<int>& p, int from, int to, const std::vector<bool>& allowed)
{
    if (p.empty() || p.front() != from || p.back() != to)
        return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= G.n || !allowed[p[i]])
            return false;
        if (i + 1 < p.size() && !G.has_edge(p[i], p[i + 1]))
            return false;
    }
    return true;
}

} // namespace detail

/// A chordless cycle of length >= 4, or nullopt. Found by taking, for each
/// vertex v and non-adjacent neighbors a < b, a shortest a–b path outside N[v].
inline std::optional<std::vector<int>> find_induced_long_cycle(const Graph& G)
{
    for (int v = 0; v < G.n; ++v) {
        std::vector<bool> allowed = detail::outside_closed_neighborhood(G, v);
        const auto& N = G.adj[v];
        for (std::size_t i = 0; i < N.size(); ++i)
            for (std::size_t j = i + 1; j < N.size(); ++j) {
                int a = N[i], b = N[j];
                if (G.has_edge(a, b))
                    continue;
                auto p = shortest_path(G, a, b, allowed);
                if (!p)
                    continue;
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), p->begin(), p->end());
                return cycle;
            }
    }
    return std::nullopt;
}

inline std::optional<std::vector<int>> find_induced_long_cycle(const SimplicialComplex& K)
{
    return find_induced_long_cycle(one_skeleton(K));
}

/// The first triple (in index order) with the three avoiding paths.
inline std::optional<Obstruction1> find_asteroidal_triple(const Graph& G)
{
    std::vector<std::vector<bool>> avoid;
    for (int v = 0; v < G.n; ++v)
        avoid.push_back(detail::outside_closed_neighborhood(G, v));
    for (int u = 0; u < G.n; ++u)
        for (int v = u + 1; v < G.n; ++v) {
            if (G.has_edge(u, v))
                continue;
            for (int w = v + 1; w < G.n; ++w) {
                if (G.has_edge(u, w) || G.has_edge(v, w))
                    continue;
                auto uv = shortest_path(G, u, v, avoid[w]);
                if (!uv)
                    continue;
                auto uw = shortest_path(G, u, w, avoid[v]);
                if (!uw)
                    continue;
                auto vw = shortest_path(G, v, w, avoid[u]);
                if (!vw)
                    continue;
                Obstruction1 o;
                o.kind = ObstructionKind::AsteroidalTriple;
                o.vertices = {u, v, w};
                o.paths = {*uv, *uw, *vw};
                return o;
            }
        }
    return std::nullopt;
}

inline std::optional<Obstruction1> find_asteroidal_triple(const SimplicialComplex& K)
{
    return find_asteroidal_triple(one_skeleton(K));
}

/// Independent replay of an obstruction against K.
inline bool verify_obstruction(const SimplicialComplex& K, const Obstruction1& o)
{
    const Graph G = one_skeleton(K);
    for (int v : o.vertices)
        if (v < 0 || v >= G.n)
            return false;
    switch (o.kind) {
    case ObstructionKind::NonClique: {
        Face I = o.vertices;
        if (I.size() < 3 || normalized(I) != I || K.contains(I))
            return false;
        for (std::size_t drop = 0; drop < I.size(); ++drop) {
            Face sub = I;
            sub.erase(sub.begin() + static_cast<long>(drop));
            if (!K.contains(sub))
                return false;
        }
        return true;
    }
    case ObstructionKind::InducedCycle: {
        const auto& c = o.vertices;
        const std::size_t n = c.size();
        if (n < 4 || normalized(c).size() != n)
            return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if (G.has_edge(c[i], c[j]) != consecutive)
                    return false;
            }
        return true;
    }
    case ObstructionKind::AsteroidalTriple: {
        if (o.vertices.size() != 3)
            return false;
        const int u = o.vertices[0], v = o.vertices[1], w = o.vertices[2];
        if (u == v || u == w || v == w)
            return false;
        return detail::valid_path(G, o.paths[0], u, v, detail::outside_closed_neighborhood(G, w)) &&
               detail::valid_path(G, o.paths[1], u, w, detail::outside_closed_neighborhood(G, v)) &&
               detail::valid_path(G, o.paths[2], v, w, detail::outside_closed_neighborhood(G, u));
    }
    }
    return false;
}

// ------------------------------------------------------------ dimension one

/// Closed intervals per vertex of K (index-aligned).
struct IntervalRepresentation {
    std::vector<std::pair<Rational, Rational>> intervals;
};

inline HullFamily interval_family(const SimplicialComplex& K, const IntervalRepresentation& R)
{
    HullFamily family;
    for (std::size_t v = 0; v < K.num_vertices(); ++v) {
        const auto& [l, r] = R.intervals.at(v);
        family.emplace_back(K.vertices()[v], PointSet{{l}, {r}});
    }
    return family;
}

inline bool verify_intervals(const SimplicialComplex& K, const IntervalRepresentation& R)
{
    if (R.intervals.size() != K.num_vertices())
        return false;
    for (const auto& [l, r] : R.intervals)
        if (l > r)
            return false;
    if (K.empty())
        return true;
    return nerve_of_hulls(interval_family(K, R)) == K;
}

struct Decide1Result {
    bool representable = false;
    std::optional<Obstruction1> obstruction;
    /// Facet indices in a consecutive arrangement.
    std::vector<int> arrangement;
    std::optional<IntervalRepresentation> intervals;
    /// Yes was decided by the three conditions but the arrangement search hit its guard.
    bool certificate_pending = false;
};

/// An ordering of the facets in which each vertex's facets are consecutive.
inline std::optional<std::vector<int>> consecutive_arrangement(const SimplicialComplex& K, const Guards& guards = {})
{
    const std::size_t m = K.num_facets();
    if (m > guards.arrangement_max_facets || m >= 63)
        throw GuardExceeded(std::to_string(m) + " facets exceed the arrangement bound of " +
                            std::to_string(guards.arrangement_max_facets));
    std::vector<int> order;
    std::set<std::pair<std::uint64_t, int>> failed;
    auto search = [&](auto&& self, std::uint64_t placed, int last, const Face& seen) -> bool {
        if (order.size() == m)
            return true;
        if (failed.count({placed, last}))
            return false;
        Face closed = last < 0 ? Face{} : face_difference(seen, K.facets()[last]);
        for (std::size_t j = 0; j < m; ++j) {
            if (placed >> j & 1U)
                continue;
            const Face& J = K.facets()[j];
            if (!disjoint(J, closed))
                continue;
            order.push_back(static_cast<int>(j));
            if (self(self, placed | (std::uint64_t{1} << j), static_cast<int>(j), face_union(seen, J)))
                return true;
            order.pop_back();
        }
        failed.insert({placed, last});
        return false;
    };
    if (search(search, 0, -1, Face{}))
        return order;
    return std::nullopt;
}

/// p_J = position of J in the arrangement, counted from 1.
inline LinearRealization arrangement_realization(const SimplicialComplex& K, const std::vector<int>& order)
{
    LinearRealization R;
    R.d = 1;
    std::vector<QPoint> p(K.num_facets());
    for (std::size_t t = 0; t < order.size(); ++t)
        p[order[t]] = {Rational(static_cast<long>(t + 1))};
    for (std::size_t j = 0; j < K.num_facets(); ++j)
        R.points.emplace_back(K.labels(K.facets()[j]), p[j]);
    return R;
}

inline Decide1Result decide_1_representable(const SimplicialComplex& K, const Guards& guards = {})
{
    Decide1Result res;
    if (auto I = is_clique_complex(K, guards)) {
        res.obstruction = Obstruction1{ObstructionKind::NonClique, *I, {}};
        return res;
    }
    const Graph G = one_skeleton(K);
    if (auto c = find_induced_long_cycle(G)) {
        res.obstruction = Obstruction1{ObstructionKind::InducedCycle, *c, {}};
        return res;
    }
    if (auto at = find_asteroidal_triple(G)) {
        res.obstruction = *at;
        return res;
    }
    res.representable = true;
    std::optional<std::vector<int>> order;
    try {
        order = consecutive_arrangement(K, guards);
    } catch (const GuardExceeded&) {
        res.certificate_pending = true;
        return res;
    }
    if (!order)
        throw VerificationFailed("conditions hold but no consecutive arrangement exists");
    res.arrangement = *order;
    IntervalRepresentation iv;
    iv.intervals.resize(K.num_vertices());
    std::vector<int> posOf(K.num_facets());
    for (std::size_t t = 0; t < order->size(); ++t)
        posOf[(*order)[t]] = static_cast<int>(t + 1);
    for (std::size_t v = 0; v < K.num_vertices(); ++v) {
        int lo = INT32_MAX, hi = 0;
        for (int j : K.facets_containing(Face{static_cast<int>(v)})) {
            lo = std::min(lo, posOf[j]);
            hi = std::max(hi, posOf[j]);
        }
        iv.intervals[v] = {Rational(lo), Rational(hi)};
    }
    if (!verify_intervals(K, iv))
        throw VerificationFailed("interval representation failed the nerve check");
    res.intervals = std::move(iv);
    return res;
}

// ---------------------------------------------------------- asteroidal maps

/// Faces F_1, F_2, F_3 and face paths π12, π13, π23 (stored in that order).
struct AsteroidalMap1 {
    std::array<Face, 3> F;
    std::array<std::vector<Face>, 3> pi;
};

/// (j, k, i) for each stored path: endpoints F_j, F_k and the excluded index i.
inline constexpr std::array<std::array<int, 3>, 3> kAsteroidalPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

inline bool verify_asteroidal_map(const SimplicialComplex& K, const AsteroidalMap1& m)
{
    auto is_face = [&](const Face& f) {
        if (f.empty() || normalized(f) != f)
            return false;
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(K.num_vertices()))
                return false;
        return K.contains(f);
    };
    for (const auto& f : m.F)
        if (!is_face(f))
            return false;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [j, k, i] = kAsteroidalPairs[p];
        const auto& path = m.pi[p];
        if (path.empty() || path.front() != m.F[j] || path.back() != m.F[k])
            return false;
        for (std::size_t t = 0; t < path.size(); ++t) {
            if (!is_face(path[t]))
                return false;
            if (t + 1 < path.size() && !is_subset(path[t], path[t + 1]) && !is_subset(path[t + 1], path[t]))
                return false;
            if (K.contains(face_union(path[t], m.F[i])))
                return false;
        }
    }
    return true;
}

inline AsteroidalMap1 build_asteroidal_map(const SimplicialComplex& K, const Obstruction1& o)
{
    if (!verify_obstruction(K, o))
        throw InputError(Errc::InvalidObstruction, std::string("not a valid ") + obstruction_name(o.kind) + " for this complex");
    AsteroidalMap1 m;
    switch (o.kind) {
    case ObstructionKind::NonClique: {
        const Face& I = o.vertices;
        for (int i = 0; i < 3; ++i)
            m.F[i] = face_difference(I, Face{I[i]});
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [j, k, i] = kAsteroidalPairs[p];
            m.pi[p] = {m.F[j], face_intersection(m.F[j], m.F[k]), m.F[k]};
        }
        break;
    }
    case ObstructionKind::InducedCycle: {
        // the cycle is v_1 … v_n with v_0 = v_n
        const auto& c = o.vertices;
        const std::size_t n = c.size();
        auto v = [&](std::size_t i) { return c[(i + n - 1) % n]; };
        auto e = [](int a, int b) { return normalized(Face{a, b}); };
        m.F = {e(v(0), v(1)), e(v(1), v(2)), e(v(2), v(3))};
        m.pi[0] = {m.F[0], Face{v(1)}, m.F[1]};
        m.pi[2] = {m.F[1], Face{v(2)}, m.F[2]};
        std::vector<Face> far{m.F[0]};
        for (std::size_t i = n; i >= 3; --i) {
            far.push_back(Face{v(i)});
            far.push_back(e(v(i - 1), v(i)));
        }
        // the last edge pushed is {v_2, v_3} = F_3
        m.pi[1] = std::move(far);
        break;
    }
    case ObstructionKind::AsteroidalTriple: {
        for (int i = 0; i < 3; ++i)
            m.F[i] = Face{o.vertices[i]};
        for (std::size_t p = 0; p < 3; ++p) {
            const auto& path = o.paths[p];
            std::vector<Face> faces{Face{path.front()}};
            for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                faces.push_back(normalized(Face{path[t], path[t + 1]}));
                faces.push_back(Face{path[t + 1]});
            }
            m.pi[p] = std::move(faces);
        }
        break;
    }
    }
    if (!verify_asteroidal_map(K, m))
        throw VerificationFailed("asteroidal map failed its replay");
    return m;
}

// ------------------------------------------------------------ dimension two

enum class Decide2Status { Yes, No, NotApplicable };

struct Decide2Result {
    Decide2Status status = Decide2Status::NotApplicable;
    DualComplex dual;
    std::optional<PlanarDrawing> drawing;
    std::optional<LinearRealization> realization;
    /// Vertex indices refer to the dual complex.
    std::optional<KuratowskiSubgraph> kuratowski;
};

inline Decide2Result decide_2_representable_cograph(const SimplicialComplex& K, const Guards& guards = {})
{
    Decide2Result res;
    res.dual = dual(K);
    if (res.dual.complex.dimension() != 1)
        return res;
    const Graph G = one_skeleton(res.dual.complex);
    PlanarityResult pr = planar_embed(G, guards);
    if (!pr.planar()) {
        res.status = Decide2Status::No;
        res.kuratowski = std::move(pr.obstruction);
        return res;
    }
    LinearRealization R;
    R.d = 2;
    for (std::size_t j = 0; j < K.num_facets(); ++j) {
        const GridPoint& g = pr.drawing->position[res.dual.vertex_of_facet[j]];
        R.points.emplace_back(K.labels(K.facets()[j]), QPoint{Rational(g.x), Rational(g.y)});
    }
    if (!verify_realization(K, R, guards))
        throw VerificationFailed("planar drawing did not give a faithful realization");
    res.status = Decide2Status::Yes;
    res.drawing = std::move(pr.drawing);
    res.realization = std::move(R);
    return res;
}

/// Appends zero coordinates; representations stay valid in higher dimension.
inline LinearRealization pad_realization(const LinearRealization& R, int d)
{
    LinearRealization out = R;
    out.d = d;
    for (auto& [labels, p] : out.points)
        p.resize(static_cast<std::size_t>(d), Rational(0));
    return out;
}

} // namespace drep
