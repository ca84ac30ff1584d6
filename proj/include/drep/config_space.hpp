#pragma once

/**
 * Product Z2-complexes: the configuration space of a complex (pairs of dual
 * faces whose common vertex sets together form a non-face) and deleted
 * products. Cells are pairs of faces of a base complex; the involution swaps
 * the two coordinates.
 */

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drep/complex.hpp"
#include "drep/representability.hpp"

namespace drep {

struct ProdCell {
    Face first;
    Face second;
    friend bool operator==(const ProdCell&, const ProdCell&) = default;
    friend auto operator<=>(const ProdCell&, const ProdCell&) = default;
};

inline ProdCell swapped(const ProdCell& c)
{
    return {c.second, c.first};
}

enum class Z2Kind { ConfigSpace, DeletedProduct };

struct Z2Complex {
    Z2Kind kind = Z2Kind::DeletedProduct;
    /// K′ for a configuration space, L for a deleted product.
    SimplicialComplex base;
    /// The complex K whose configuration space this is.
    SimplicialComplex source;
    /// base vertex → index into source.facets()
    std::vector<int> facet_of;
    std::vector<ProdCell> maximal_cells;
};

// ---------------------------------------------------------------- predicates

/// (⋂α) ∪ (⋂β) ∉ K for nonempty faces α, β of K′ (members are K-facets).
inline bool cell_condition(const SimplicialComplex& K, const DualComplex& D, const Face& alpha, const Face& beta)
{
    for (const Face* f : {&alpha, &beta})
        if (f->empty() || !std::is_sorted(f->begin(), f->end()) ||
            std::any_of(f->begin(), f->end(), [&](int v) { return v < 0 || v >= static_cast<int>(D.complex.num_vertices()); }) ||
            !D.complex.contains(*f))
            throw InputError(Errc::NotADualFace, "cell coordinate is not a nonempty face of the dual");
    Face a = common_vertices(K, D.to_facets(alpha));
    Face b = common_vertices(K, D.to_facets(beta));
    return !K.contains(face_union(a, b));
}

inline bool cell_condition(const SimplicialComplex& K, const Face& alpha, const Face& beta)
{
    return cell_condition(K, dual(K), alpha, beta);
}

/// Membership of an arbitrary face pair in Z.
inline bool z2_contains(const Z2Complex& Z, const ProdCell& c)
{
    const int n = static_cast<int>(Z.base.num_vertices());
    for (const Face* f : {&c.first, &c.second})
        if (f->empty() || normalized(*f) != *f || f->front() < 0 || f->back() >= n || !Z.base.contains(*f))
            return false;
    if (Z.kind == Z2Kind::DeletedProduct)
        return disjoint(c.first, c.second);
    auto to_facets = [&](const Face& f) {
        std::vector<int> out;
        for (int v : f)
            out.push_back(Z.facet_of[v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    Face a = common_vertices(Z.source, to_facets(c.first));
    Face b = common_vertices(Z.source, to_facets(c.second));
    return !Z.source.contains(face_union(a, b));
}

// ------------------------------------------------------------- construction

inline Z2Complex config_space(const SimplicialComplex& K, const Guards& guards = {})
{
    Z2Complex Z;
    Z.kind = Z2Kind::ConfigSpace;
    Z.source = K;
    DualComplex D = dual(K);
    Z.base = D.complex;
    Z.facet_of = D.facet_of;
    if (K.empty())
        return Z;

    // Every cell (α, β) lies below (cont_A, cont_B) with A = ⋂α, B = ⋂β.
    std::vector<Face> faces = all_faces(K, guards);
    std::vector<Face> conts;
    for (const auto& f : faces)
        conts.push_back(D.to_dual(cont(K, f)));
    std::set<ProdCell> candidates;
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b) {
            if (K.contains(face_union(faces[a], faces[b])))
                continue;
            candidates.insert({conts[a], conts[b]});
            if (candidates.size() > guards.max_cells)
                throw GuardExceeded("configuration space has more than " + std::to_string(guards.max_cells) + " cells");
        }
    const int m = static_cast<int>(Z.base.num_vertices());
    for (const auto& c : candidates) {
        bool maximal = true;
        for (int v = 0; v < m && maximal; ++v) {
            for (int side = 0; side < 2 && maximal; ++side) {
                const Face& f = side == 0 ? c.first : c.second;
                if (std::binary_search(f.begin(), f.end(), v))
                    continue;
                Face g = face_union(f, Face{v});
                if (!Z.base.contains(g))
                    continue;
                ProdCell bigger = side == 0 ? ProdCell{g, c.second} : ProdCell{c.first, g};
                if (z2_contains(Z, bigger))
                    maximal = false;
            }
        }
        if (maximal)
            Z.maximal_cells.push_back(c);
    }
    return Z;
}

inline Z2Complex deleted_product(const SimplicialComplex& L, const Guards& guards = {})
{
    Z2Complex Z;
    Z.kind = Z2Kind::DeletedProduct;
    Z.base = L;
    if (L.empty())
        return Z;
    std::vector<Face> faces = all_faces(L, guards);
    const int n = static_cast<int>(L.num_vertices());
    auto extendable = [&](const Face& f, const Face& other) {
        for (int v = 0; v < n; ++v) {
            if (std::binary_search(f.begin(), f.end(), v) || std::binary_search(other.begin(), other.end(), v))
                continue;
            if (L.contains(face_union(f, Face{v})))
                return true;
        }
        return false;
    };
    for (const auto& a : faces)
        for (const auto& b : faces) {
            if (!disjoint(a, b) || extendable(a, b) || extendable(b, a))
                continue;
            Z.maximal_cells.push_back({a, b});
            if (Z.maximal_cells.size() > guards.max_cells)
                throw GuardExceeded("deleted product has more than " + std::to_string(guards.max_cells) + " cells");
        }
    std::sort(Z.maximal_cells.begin(), Z.maximal_cells.end());
    return Z;
}

/// Every cell, i.e. the downward closure of the maximal cells.
inline std::vector<ProdCell> all_cells(const Z2Complex& Z, const Guards& guards = {})
{
    std::set<ProdCell> cells;
    auto subsets = [&](const Face& f) {
        std::vector<Face> out;
        if (f.size() >= 40)
            throw GuardExceeded("cell coordinate too large to enumerate");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
            Face g;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1U)
                    g.push_back(f[i]);
            out.push_back(std::move(g));
        }
        return out;
    };
    for (const auto& c : Z.maximal_cells) {
        auto A = subsets(c.first);
        auto B = subsets(c.second);
        if (A.size() * B.size() > guards.max_cells)
            throw GuardExceeded("too many cells to enumerate");
        for (const auto& a : A)
            for (const auto& b : B)
                cells.insert({a, b});
        if (cells.size() > guards.max_cells)
            throw GuardExceeded("too many cells to enumerate");
    }
    return {cells.begin(), cells.end()};
}

// ---------------------------------------------------------------- node graph

/// The subdivided 1-skeleton: cells with |α| + |β| <= 3, joined by moves that
/// change one coordinate to a comparable face. It has the components of Z.
struct NodeGraph {
    std::vector<ProdCell> nodes;
    std::vector<std::vector<int>> adj;
    std::vector<int> swap_of;

    int index_of(const ProdCell& c) const
    {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
        if (it == nodes.end() || *it != c)
            return -1;
        return static_cast<int>(it - nodes.begin());
    }
};

inline NodeGraph node_graph(const Z2Complex& Z, const Guards& guards = {})
{
    std::set<ProdCell> nodes;
    for (const auto& c : Z.maximal_cells) {
        auto small = [](const Face& f) {
            std::vector<Face> out;
            for (std::size_t i = 0; i < f.size(); ++i) {
                out.push_back({f[i]});
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    out.push_back({f[i], f[j]});
            }
            return out;
        };
        for (const auto& a : small(c.first))
            for (const auto& b : small(c.second))
                if (a.size() + b.size() <= 3)
                    nodes.insert({a, b});
        if (nodes.size() > guards.max_cells)
            throw GuardExceeded("node graph has more than " + std::to_string(guards.max_cells) + " nodes");
    }
    NodeGraph G;
    G.nodes.assign(nodes.begin(), nodes.end());
    G.adj.resize(G.nodes.size());
    G.swap_of.resize(G.nodes.size());
    for (std::size_t i = 0; i < G.nodes.size(); ++i) {
        const ProdCell& c = G.nodes[i];
        G.swap_of[i] = G.index_of(swapped(c));
        // an edge coordinate connects down to both of its vertices
        for (int side = 0; side < 2; ++side) {
            const Face& f = side == 0 ? c.first : c.second;
            if (f.size() != 2)
                continue;
            for (int v : f) {
                ProdCell lower = side == 0 ? ProdCell{{v}, c.second} : ProdCell{c.first, {v}};
                int j = G.index_of(lower);
                if (j >= 0) {
                    G.adj[i].push_back(j);
                    G.adj[j].push_back(static_cast<int>(i));
                }
            }
        }
    }
    for (auto& l : G.adj)
        std::sort(l.begin(), l.end());
    return G;
}

// ----------------------------------------------------------------- coloring

struct S0Result {
    bool colorable = true;
    NodeGraph graph;
    /// component id per node, numbered by first node
    std::vector<int> component;
    /// +1 / -1 per component when colorable
    std::vector<int> sign;
    int invariant_component = -1;
};

inline S0Result s0_colorable(const Z2Complex& Z, const Guards& guards = {})
{
    S0Result r;
    r.graph = node_graph(Z, guards);
    const auto& G = r.graph;
    const int n = static_cast<int>(G.nodes.size());
    r.component.assign(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (r.component[s] >= 0)
            continue;
        std::deque<int> q{s};
        r.component[s] = count;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : G.adj[v])
                if (r.component[u] < 0) {
                    r.component[u] = count;
                    q.push_back(u);
                }
        }
        ++count;
    }
    std::vector<int> partner(count, -1);
    for (int i = 0; i < n; ++i)
        partner[r.component[i]] = r.component[G.swap_of[i]];
    for (int c = 0; c < count; ++c)
        if (partner[c] == c) {
            r.colorable = false;
            r.invariant_component = c;
            return r;
        }
    r.sign.resize(count);
    for (int c = 0; c < count; ++c)
        r.sign[c] = c < partner[c] ? 1 : -1;
    return r;
}

/// Coloring replay: swap-paired nodes get opposite signs, adjacent nodes equal ones.
inline bool verify_coloring(const S0Result& r)
{
    if (!r.colorable)
        return false;
    const auto& G = r.graph;
    auto sign = [&](int i) { return r.sign.at(r.component.at(i)); };
    for (std::size_t i = 0; i < G.nodes.size(); ++i) {
        if (G.swap_of[i] < 0 || sign(static_cast<int>(i)) != -sign(G.swap_of[i]))
            return false;
        for (int j : G.adj[i])
            if (sign(j) != sign(static_cast<int>(i)))
                return false;
    }
    return true;
}

// ----------------------------------------------------------- symmetric cycles

/// c_0 … c_{2m-1} with c_{i+m} = swap(c_i).
struct SymmetricCycle {
    std::vector<ProdCell> nodes;
    std::size_t half = 0;
};

inline bool verify_symmetric_cycle(const Z2Complex& Z, const SymmetricCycle& c)
{
    const std::size_t m = c.half;
    if (m == 0 || c.nodes.size() != 2 * m)
        return false;
    for (std::size_t i = 0; i < m; ++i)
        if (c.nodes[i + m] != swapped(c.nodes[i]))
            return false;
    for (const auto& node : c.nodes)
        if (!z2_contains(Z, node))
            return false;
    auto strictly_comparable = [](const Face& a, const Face& b) {
        return a != b && (is_subset(a, b) || is_subset(b, a));
    };
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const ProdCell& a = c.nodes[i];
        const ProdCell& b = c.nodes[(i + 1) % c.nodes.size()];
        bool firstMoves = a.second == b.second && strictly_comparable(a.first, b.first);
        bool secondMoves = a.first == b.first && strictly_comparable(a.second, b.second);
        if (!firstMoves && !secondMoves)
            return false;
        ProdCell coarser{a.first.size() >= b.first.size() ? a.first : b.first,
                         a.second.size() >= b.second.size() ? a.second : b.second};
        if (!z2_contains(Z, coarser))
            return false;
    }
    return true;
}

/// Shortest path in the node graph from the first node p of the first
/// swap-invariant component to swap(p), closed up by its swap image.
inline std::optional<SymmetricCycle> find_symmetric_cycle(const Z2Complex& Z, const Guards& guards = {})
{
    S0Result r = s0_colorable(Z, guards);
    if (r.colorable)
        return std::nullopt;
    const auto& G = r.graph;
    int p = 0;
    while (r.component[p] != r.invariant_component)
        ++p;
    const int target = G.swap_of[p];
    std::vector<int> parent(G.nodes.size(), -1);
    std::vector<bool> seen(G.nodes.size(), false);
    std::deque<int> q{p};
    seen[p] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == target)
            break;
        for (int u : G.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                parent[u] = v;
                q.push_back(u);
            }
    }
    std::vector<int> path;
    for (int v = target; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    SymmetricCycle c;
    c.half = path.size() - 1;
    for (std::size_t i = 0; i < c.half; ++i)
        c.nodes.push_back(G.nodes[path[i]]);
    for (std::size_t i = 0; i < c.half; ++i)
        c.nodes.push_back(swapped(G.nodes[path[i]]));
    if (!verify_symmetric_cycle(Z, c))
        throw VerificationFailed("symmetric cycle failed its replay");
    return c;
}

/// Carries a verified asteroidal map to a symmetric cycle in the configuration
/// space, sending each face G to cont_G along the hexagon of the triangle's
/// deleted product.
inline SymmetricCycle lift_asteroidal(const SimplicialComplex& K, const AsteroidalMap1& m)
{
    if (!verify_asteroidal_map(K, m))
        throw InputError(Errc::InvalidAsteroidalMap, "asteroidal map failed verification");
    DualComplex D = dual(K);
    auto c = [&](const Face& g) { return D.to_dual(cont(K, g)); };
    std::vector<ProdCell> path;
    auto push = [&](ProdCell node) {
        if (path.empty() || path.back() != node)
            path.push_back(std::move(node));
    };
    const auto& pi12 = m.pi[0];
    const auto& pi13 = m.pi[1];
    const auto& pi23 = m.pi[2];
    for (const auto& g : pi23)
        push({c(m.F[0]), c(g)});
    for (const auto& g : pi12)
        push({c(g), c(m.F[2])});
    for (auto it = pi13.rbegin(); it != pi13.rend(); ++it)
        push({c(m.F[1]), c(*it)});
    SymmetricCycle cyc;
    cyc.half = path.size() - 1;
    for (std::size_t i = 0; i < cyc.half; ++i)
        cyc.nodes.push_back(path[i]);
    for (std::size_t i = 0; i < cyc.half; ++i)
        cyc.nodes.push_back(swapped(path[i]));
    Z2Complex Z;
    Z.kind = Z2Kind::ConfigSpace;
    Z.source = K;
    Z.base = D.complex;
    Z.facet_of = D.facet_of;
    if (!verify_symmetric_cycle(Z, cyc))
        throw VerificationFailed("lifted cycle failed its replay");
    return cyc;
}

// ------------------------------------------------------- co-graph identity

enum class CographIdentity { Equal, NotApplicable, CounterWitness };

struct CographCheck {
    CographIdentity status = CographIdentity::NotApplicable;
    std::optional<ProdCell> witness;
};

inline CographCheck check_cograph_identity(const SimplicialComplex& K, const Guards& guards = {})
{
    CographCheck r;
    DualComplex D = dual(K);
    if (D.complex.dimension() != 1)
        return r;
    Z2Complex A = config_space(K, guards);
    Z2Complex B = deleted_product(D.complex, guards);
    std::vector<ProdCell> x = A.maximal_cells, y = B.maximal_cells;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x == y) {
        r.status = CographIdentity::Equal;
        return r;
    }
    r.status = CographIdentity::CounterWitness;
    std::vector<ProdCell> diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    r.witness = diff.front();
    return r;
}

// --------------------------------------------------------- dual classifying

struct DualClassification {
    SimplicialComplex K;
    /// L-vertex index → index into K.facets()
    std::vector<int> facet_of_vertex;
};

/// K is the nerve of the nonempty faces of L; its facets are the cont_i of L.
inline DualClassification dual_classify(const SimplicialComplex& L, const Guards& guards = {})
{
    if (L.empty())
        throw InputError(Errc::EmptyInput, "dual classification of the empty complex");
    std::vector<Face> faces = all_faces(L, guards);
    std::vector<VertexLabel> names = face_labels(L, faces);
    std::vector<Face> conts(L.num_vertices());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int v : faces[f])
            conts[v].push_back(static_cast<int>(f));
    DualClassification out;
    out.K = SimplicialComplex::from_indexed(names, conts);
    const SimplicialComplex& K = out.K;
    for (std::size_t v = 0; v < L.num_vertices(); ++v) {
        Face f;
        for (int idx : conts[v])
            f.push_back(K.index_of(names[idx]));
        f = normalized(std::move(f));
        auto it = std::lower_bound(K.facets().begin(), K.facets().end(), f);
        if (it == K.facets().end() || *it != f)
            throw VerificationFailed("cont set is not a facet of the classifying complex");
        out.facet_of_vertex.push_back(static_cast<int>(it - K.facets().begin()));
    }

    DualComplex D = dual(K);
    auto C = [&](const Face& I) {
        std::vector<int> js;
        for (int i : I)
            js.push_back(out.facet_of_vertex[i]);
        return D.to_dual(js);
    };
    for (const auto& I : faces)
        if (!D.complex.contains(C(I)))
            throw VerificationFailed("a face of L is missing from the dual");
    for (const auto& I : minimal_nonfaces(L, guards))
        if (D.complex.contains(C(I)))
            throw VerificationFailed("a non-face of L appears in the dual");
    for (const auto& F : faces)
        for (const auto& G : faces) {
            Face a = common_vertices(K, D.to_facets(C(F)));
            Face b = common_vertices(K, D.to_facets(C(G)));
            if (disjoint(F, G) == K.contains(face_union(a, b)))
                throw VerificationFailed("intersection pattern of L is not recorded by the classifying complex");
        }
    return out;
}

/// The classifying complex of the d-skeleton of the (2d+2)-simplex.
inline SimplicialComplex vkf_instance(int d, const Guards& guards = {})
{
    if (d < 1)
        throw InputError(Errc::DimTooBig, "vkf instance needs d >= 1");
    if (d > 3)
        throw GuardExceeded("vkf instances are supported for d <= 3");
    return dual_classify(simplex_skeleton(2 * d + 2, d), guards).K;
}

} // namespace drep
