#pragma once

/**
 * Simplicial complexes stored by their facet antichain.
 *
 * Vertices carry text labels and are kept in lexicographic label order, so a
 * vertex index doubles as its rank among the labels. A `Face` is a sorted
 * vector of vertex indices relative to one complex; comparing two faces of
 * the same complex lexicographically is the same as comparing their label
 * sequences, which gives every enumeration below a canonical order.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drep/error.hpp"
#include "drep/rational.hpp"

namespace drep {

using VertexLabel = std::string;
using Face = std::vector<int>;

// ---------------------------------------------------------------- set helpers

inline bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_union(const Face& a, const Face& b)
{
    Face out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_intersection(const Face& a, const Face& b)
{
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_difference(const Face& a, const Face& b)
{
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool disjoint(const Face& a, const Face& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

inline Face normalized(Face f)
{
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

/// Canonical face order: by cardinality, then lexicographically.
inline bool size_lex_less(const Face& a, const Face& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

inline bool valid_label(const VertexLabel& label)
{
    if (label.empty())
        return false;
    for (char c : label)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
            return false;
    return true;
}

/// Removes duplicates and every set contained in another one.
inline std::vector<Face> maximal_sets(std::vector<Face> sets)
{
    for (auto& s : sets)
        s = normalized(std::move(s));
    std::sort(sets.begin(), sets.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> kept;
    for (auto& s : sets) {
        if (s.empty())
            continue;
        bool covered = false;
        for (const auto& k : kept)
            if (k.size() > s.size() && is_subset(s, k)) {
                covered = true;
                break;
            }
        if (!covered)
            kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// ---------------------------------------------------------- SimplicialComplex

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes an arbitrary face list over `labels` (indices into it) into
    /// a complex: keeps maximal faces only, drops unused labels, and reindexes
    /// vertices in label order.
    static SimplicialComplex from_indexed(const std::vector<VertexLabel>& labels, std::vector<Face> faces)
    {
        std::vector<Face> top = maximal_sets(std::move(faces));
        std::vector<int> used;
        for (const auto& f : top)
            used.insert(used.end(), f.begin(), f.end());
        used = normalized(std::move(used));
        std::sort(used.begin(), used.end(), [&](int a, int b) { return labels.at(a) < labels.at(b); });

        SimplicialComplex K;
        std::unordered_map<int, int> remap;
        for (int old : used) {
            remap[old] = static_cast<int>(K.vertices_.size());
            K.vertices_.push_back(labels.at(old));
        }
        for (std::size_t i = 1; i < K.vertices_.size(); ++i)
            if (K.vertices_[i] == K.vertices_[i - 1])
                throw InputError(Errc::BadLabel, "duplicate vertex label '" + K.vertices_[i] + "'");
        for (auto& f : top) {
            for (int& v : f)
                v = remap.at(v);
            std::sort(f.begin(), f.end());
        }
        std::sort(top.begin(), top.end());
        K.facets_ = std::move(top);
        K.build_index();
        return K;
    }

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_facets() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }

    int dimension() const
    {
        int d = -1;
        for (const auto& f : facets_)
            d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    std::optional<int> find(const VertexLabel& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    int index_of(const VertexLabel& label) const
    {
        auto i = find(label);
        if (!i)
            throw InputError(Errc::UnknownVertex, "unknown vertex '" + label + "'");
        return *i;
    }

    Face face(const std::vector<VertexLabel>& labels) const
    {
        Face f;
        f.reserve(labels.size());
        for (const auto& l : labels)
            f.push_back(index_of(l));
        return normalized(std::move(f));
    }

    std::vector<VertexLabel> labels(const Face& f) const
    {
        std::vector<VertexLabel> out;
        out.reserve(f.size());
        for (int v : f)
            out.push_back(vertices_.at(v));
        return out;
    }

    /// Closure under inclusion: the empty face is always contained.
    bool contains(const Face& f) const
    {
        if (f.empty())
            return true;
        for (const auto& J : facets_)
            if (J.size() >= f.size() && is_subset(f, J))
                return true;
        return false;
    }

    /// Indices (into facets()) of the facets containing `f`, ascending.
    std::vector<int> facets_containing(const Face& f) const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (is_subset(f, facets_[i]))
                out.push_back(static_cast<int>(i));
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    void build_index()
    {
        index_.clear();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            index_.emplace(vertices_[i], static_cast<int>(i));
    }

    std::vector<VertexLabel> vertices_;
    std::vector<Face> facets_;
    std::unordered_map<VertexLabel, int> index_;
};

// ------------------------------------------------------------- construction

/// Builds a complex from raw label faces; non-maximal faces are absorbed.
inline SimplicialComplex build_complex(const std::vector<std::vector<VertexLabel>>& raw_faces)
{
    if (raw_faces.empty())
        throw InputError(Errc::EmptyInput, "no faces given");
    std::vector<VertexLabel> labels;
    std::unordered_map<VertexLabel, int> seen;
    std::vector<Face> faces;
    for (const auto& rf : raw_faces) {
        if (rf.empty())
            throw InputError(Errc::EmptyInput, "empty face");
        Face f;
        for (const auto& l : rf) {
            if (!valid_label(l))
                throw InputError(Errc::BadLabel, "malformed vertex label '" + l + "'");
            auto [it, inserted] = seen.emplace(l, static_cast<int>(labels.size()));
            if (inserted)
                labels.push_back(l);
            f.push_back(it->second);
        }
        faces.push_back(std::move(f));
    }
    return SimplicialComplex::from_indexed(labels, std::move(faces));
}

inline bool contains_face(const SimplicialComplex& K, const Face& F)
{
    return K.contains(F);
}

/// Unique labels for faces of `K`, used when faces become vertices of a new
/// complex. Single-character labels concatenate (`123`), longer ones join with
/// `.`; bracketed and positional forms are fallbacks against collisions.
inline std::vector<VertexLabel> face_labels(const SimplicialComplex& K, const std::vector<Face>& faces)
{
    auto unique = [](const std::vector<VertexLabel>& ls) {
        std::set<VertexLabel> s(ls.begin(), ls.end());
        return s.size() == ls.size();
    };
    auto join = [&](const Face& f, const std::string& sep, const std::string& open, const std::string& close) {
        std::string out = open;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                out += sep;
            out += K.vertices()[f[i]];
        }
        return out + close;
    };
    bool single = std::all_of(K.vertices().begin(), K.vertices().end(), [](const VertexLabel& l) { return l.size() == 1; });
    std::vector<VertexLabel> out;
    for (const auto& f : faces)
        out.push_back(join(f, single ? "" : ".", "", ""));
    if (unique(out))
        return out;
    out.clear();
    for (const auto& f : faces)
        out.push_back(join(f, ",", "[", "]"));
    if (unique(out))
        return out;
    out.clear();
    for (std::size_t i = 0; i < faces.size(); ++i)
        out.push_back("F" + std::to_string(i));
    return out;
}

/// Every nonempty face of `K`, ordered by cardinality then lexicographically.
inline std::vector<Face> all_faces(const SimplicialComplex& K, const Guards& guards = {})
{
    std::set<Face> faces;
    for (const auto& J : K.facets()) {
        if (J.size() >= 40 || ((std::uint64_t{1} << J.size()) - 1) > guards.max_faces)
            throw GuardExceeded("facet with " + std::to_string(J.size()) + " vertices exceeds the face bound");
        std::uint64_t limit = std::uint64_t{1} << J.size();
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            Face f;
            for (std::size_t i = 0; i < J.size(); ++i)
                if (mask >> i & 1U)
                    f.push_back(J[i]);
            faces.insert(std::move(f));
        }
        if (faces.size() > guards.max_faces)
            throw GuardExceeded("more than " + std::to_string(guards.max_faces) + " faces");
    }
    std::vector<Face> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

inline std::size_t count_faces(const SimplicialComplex& K, const Guards& guards = {})
{
    return all_faces(K, guards).size();
}

inline long euler_characteristic(const SimplicialComplex& K, const Guards& guards = {})
{
    long chi = 0;
    for (const auto& f : all_faces(K, guards))
        chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// ------------------------------------------------------------------ skeleta

inline SimplicialComplex skeleton(const SimplicialComplex& K, int k)
{
    if (k < 0)
        return {};
    std::vector<Face> faces;
    const std::size_t size = static_cast<std::size_t>(k) + 1;
    for (const auto& J : K.facets()) {
        if (J.size() <= size) {
            faces.push_back(J);
            continue;
        }
        // all size-subsets of J
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Face f;
            for (int p : pick)
                f.push_back(J[p]);
            faces.push_back(std::move(f));
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pick[i] == static_cast<int>(J.size() - size) + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (std::size_t j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return SimplicialComplex::from_indexed(K.vertices(), std::move(faces));
}

/// The full simplex on vertices 1..n+1.
inline SimplicialComplex simplex(int n)
{
    std::vector<VertexLabel> labels;
    Face all;
    for (int i = 0; i <= n; ++i) {
        labels.push_back(std::to_string(i + 1));
        all.push_back(i);
    }
    if (n < 0)
        return {};
    return SimplicialComplex::from_indexed(labels, {all});
}

inline SimplicialComplex simplex_skeleton(int n, int k)
{
    return skeleton(simplex(n), k);
}

/// The boundary of the n-simplex.
inline SimplicialComplex simplex_boundary(int n)
{
    return simplex_skeleton(n, n - 1);
}

// ------------------------------------------------------------------- nerves

/// Nerve of a named family of finite sets. Names of empty sets are dropped.
template <class T>
SimplicialComplex nerve(const std::vector<std::pair<VertexLabel, std::set<T>>>& family)
{
    std::vector<VertexLabel> names;
    std::map<T, Face> holders;
    for (const auto& [name, members] : family) {
        if (!valid_label(name))
            throw InputError(Errc::BadLabel, "malformed set name '" + name + "'");
        int idx = static_cast<int>(names.size());
        names.push_back(name);
        for (const auto& x : members)
            holders[x].push_back(idx);
    }
    std::vector<Face> faces;
    for (auto& [x, f] : holders)
        faces.push_back(f);
    return SimplicialComplex::from_indexed(names, std::move(faces));
}

/// The dual complex: nerve of the facets. `facet_of[v]` is the index into
/// `K.facets()` of the facet named by dual vertex `v`.
struct DualComplex {
    SimplicialComplex complex;
    std::vector<int> facet_of;
    std::vector<int> vertex_of_facet;

    /// Translates a set of facet indices of the primal complex into a dual face.
    Face to_dual(const std::vector<int>& facet_indices) const
    {
        Face f;
        for (int j : facet_indices)
            f.push_back(vertex_of_facet.at(j));
        return normalized(std::move(f));
    }

    std::vector<int> to_facets(const Face& dual_face) const
    {
        std::vector<int> out;
        for (int v : dual_face)
            out.push_back(facet_of.at(v));
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline DualComplex dual(const SimplicialComplex& K)
{
    DualComplex D;
    if (K.empty())
        return D;
    std::vector<VertexLabel> names = face_labels(K, K.facets());
    std::vector<Face> faces;
    for (std::size_t v = 0; v < K.num_vertices(); ++v)
        faces.push_back(K.facets_containing(Face{static_cast<int>(v)}));
    D.complex = SimplicialComplex::from_indexed(names, std::move(faces));
    D.facet_of.assign(K.num_facets(), -1);
    D.vertex_of_facet.assign(K.num_facets(), -1);
    for (std::size_t j = 0; j < K.num_facets(); ++j) {
        int v = D.complex.index_of(names[j]);
        D.facet_of[v] = static_cast<int>(j);
        D.vertex_of_facet[j] = v;
    }
    return D;
}

/// Facets of `K` containing the nonempty face `F`, as indices into K.facets().
inline std::vector<int> cont(const SimplicialComplex& K, const Face& F)
{
    if (F.empty())
        throw InputError(Errc::NotAFace, "cont of the empty face");
    auto out = K.facets_containing(F);
    if (out.empty())
        throw InputError(Errc::NotAFace, "face is not in the complex");
    return out;
}

/// Intersection of the facets with the given indices.
inline Face common_vertices(const SimplicialComplex& K, const std::vector<int>& facet_indices)
{
    if (facet_indices.empty())
        return {};
    Face acc = K.facets().at(facet_indices.front());
    for (std::size_t i = 1; i < facet_indices.size() && !acc.empty(); ++i)
        acc = face_intersection(acc, K.facets().at(facet_indices[i]));
    return acc;
}

/// Vertices are the nonempty faces of K, facets are the maximal chains.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K, const Guards& guards = {})
{
    if (K.empty())
        return {};
    std::vector<Face> faces = all_faces(K, guards);
    std::vector<VertexLabel> names = face_labels(K, faces);
    std::map<Face, int> id;
    for (std::size_t i = 0; i < faces.size(); ++i)
        id.emplace(faces[i], static_cast<int>(i));

    std::size_t chains = 0;
    std::vector<Face> top;
    for (const auto& J : K.facets()) {
        Face perm = J;
        do {
            if (++chains > guards.max_faces)
                throw GuardExceeded("too many maximal chains in the subdivision");
            Face chain;
            Face prefix;
            for (int v : perm) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(id.at(prefix));
            }
            top.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_indexed(names, std::move(top));
}

/// Inclusion-minimal vertex sets that are not faces, in (size, lex) order.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& K, const Guards& guards = {})
{
    std::vector<Face> faces = all_faces(K, guards);
    faces.insert(faces.begin(), Face{});
    std::vector<Face> out;
    const int n = static_cast<int>(K.num_vertices());
    for (const auto& F : faces) {
        int start = F.empty() ? 0 : F.back() + 1;
        for (int v = start; v < n; ++v) {
            Face I = F;
            I.push_back(v);
            if (K.contains(I))
                continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop + 1 < I.size() && minimal; ++drop) {
                Face sub = I;
                sub.erase(sub.begin() + static_cast<long>(drop));
                minimal = K.contains(sub);
            }
            if (minimal)
                out.push_back(std::move(I));
        }
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

/// K ∩ 2^W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<VertexLabel>& W)
{
    Face w = K.face(W);
    std::vector<Face> faces;
    for (const auto& J : K.facets())
        faces.push_back(face_intersection(J, w));
    return SimplicialComplex::from_indexed(K.vertices(), std::move(faces));
}

inline SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const Face& w)
{
    std::vector<Face> faces;
    for (const auto& J : K.facets())
        faces.push_back(face_intersection(J, w));
    return SimplicialComplex::from_indexed(K.vertices(), std::move(faces));
}

/// Clique (flag) complex of the 1-skeleton of K. Exponential in the clique
/// size; intended for desk-scale graphs.
inline SimplicialComplex clique_complex(const SimplicialComplex& K)
{
    const int n = static_cast<int>(K.num_vertices());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& J : K.facets())
        for (int a : J)
            for (int b : J)
                if (a != b)
                    adj[a][b] = true;
    std::vector<Face> cliques;
    // Bron–Kerbosch without pivoting; graphs here are small.
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto expand = [&](auto&& self, Face R, std::vector<int> P, std::vector<int> X) -> void {
        if (P.empty() && X.empty()) {
            cliques.push_back(R);
            return;
        }
        while (!P.empty()) {
            int v = P.front();
            std::vector<int> P2, X2;
            for (int u : P)
                if (adj[v][u])
                    P2.push_back(u);
            for (int u : X)
                if (adj[v][u])
                    X2.push_back(u);
            Face R2 = R;
            R2.push_back(v);
            self(self, normalized(R2), P2, X2);
            P.erase(P.begin());
            X.push_back(v);
        }
    };
    expand(expand, {}, all, {});
    return SimplicialComplex::from_indexed(K.vertices(), std::move(cliques));
}

/// Returns nullopt when K is the clique complex of its 1-skeleton, otherwise an
/// inclusion-minimal non-face all of whose pairs are edges.
inline std::optional<Face> is_clique_complex(const SimplicialComplex& K, const Guards& guards = {})
{
    for (auto& I : minimal_nonfaces(K, guards))
        if (I.size() >= 3)
            return I;
    return std::nullopt;
}

// ------------------------------------------------------- geometric points

/// A point of |K| given by positive barycentric weights on its support face.
struct GeometricPoint {
    Face support;
    std::vector<Rational> weights;
};

inline bool valid_point(const SimplicialComplex& K, const GeometricPoint& x)
{
    if (x.support.empty() || x.support.size() != x.weights.size())
        return false;
    if (!std::is_sorted(x.support.begin(), x.support.end()) ||
        std::adjacent_find(x.support.begin(), x.support.end()) != x.support.end())
        return false;
    Rational total = 0;
    for (const auto& w : x.weights) {
        if (w <= 0)
            return false;
        total += w;
    }
    return total == 1 && K.contains(x.support);
}

/// The map |K| → |K′| built through the barycentric subdivision: the point is
/// rewritten as a combination of barycenters along the chain of its weight
/// level sets, and each chain face F goes to the barycenter of cont_F.
inline GeometricPoint iota_point(const SimplicialComplex& K, const DualComplex& D, const GeometricPoint& x)
{
    if (!valid_point(K, x))
        throw InputError(Errc::NotAFace, "point is not a valid point of |K|");
    std::vector<std::size_t> order(x.support.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x.weights[a] > x.weights[b]; });

    std::map<int, Rational> image;
    Face prefix;
    for (std::size_t k = 0; k < order.size(); ++k) {
        int v = x.support[order[k]];
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        Rational next = k + 1 < order.size() ? x.weights[order[k + 1]] : Rational(0);
        Rational lambda = Rational(static_cast<long>(k + 1)) * (x.weights[order[k]] - next);
        if (lambda == 0)
            continue;
        Face c = D.to_dual(cont(K, prefix));
        Rational share = lambda / Rational(static_cast<long>(c.size()));
        for (int u : c)
            image[u] += share;
    }
    GeometricPoint y;
    for (auto& [u, w] : image) {
        y.support.push_back(u);
        y.weights.push_back(w);
    }
    return y;
}

} // namespace drep
