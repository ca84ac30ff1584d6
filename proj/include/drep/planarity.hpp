#pragma once

/**
 * Planarity for small graphs.
 *
 * Embedding: path addition (Demoucron–Malgrange–Pertuiset) on each block, with
 * block rotations concatenated at cut vertices. Drawing: each component is
 * triangulated with auxiliary vertices and placed by the de Fraysseix–Pach–
 * Pollack shift method on an integer grid; the auxiliary vertices are then
 * dropped. Non-planar graphs yield a Kuratowski subdivision found by greedy
 * edge deletion.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "drep/error.hpp"
#include "drep/graph.hpp"

namespace drep {

struct GridPoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Straight-line drawing, indexed by graph vertex.
struct PlanarDrawing {
    std::vector<GridPoint> position;
};

enum class KuratowskiKind { K5, K33 };

inline const char* kuratowski_name(KuratowskiKind k)
{
    return k == KuratowskiKind::K5 ? "K5" : "K3,3";
}

/// Branch vertices (for K3,3 the first three form one side) and one path per
/// branch pair, each running from the earlier to the later branch vertex.
struct KuratowskiSubgraph {
    KuratowskiKind kind = KuratowskiKind::K5;
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
    std::optional<PlanarDrawing> drawing;
    std::optional<KuratowskiSubgraph> obstruction;
    bool planar() const { return drawing.has_value(); }
};

using Rotation = std::vector<std::vector<int>>;

namespace detail {

/// Face boundaries of a planar embedding of a biconnected graph with at least
/// three vertices, or nullopt if it is not planar.
inline std::optional<std::vector<std::vector<int>>> dmp_faces(const Graph& B)
{
    const int m = B.n;
    auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };

    // initial cycle: vertex 0, a neighbor a, and a shortest a–0 path avoiding edge 0a
    int a0 = B.adj[0].front();
    std::vector<int> parent(m, -1);
    std::vector<bool> seen(m, false);
    std::deque<int> queue{a0};
    seen[a0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : B.adj[v]) {
            if (seen[u] || (v == a0 && u == 0))
                continue;
            seen[u] = true;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    if (!seen[0])
        return std::nullopt; // not biconnected; callers never pass such blocks
    std::vector<int> cycle;
    for (int v = 0; v != -1; v = parent[v])
        cycle.push_back(v);

    std::vector<bool> inH(m, false);
    std::set<Edge> hEdges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        inH[cycle[i]] = true;
        hEdges.insert(key(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    std::vector<std::vector<int>> faces{cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
    const std::size_t total = B.num_edges();

    struct Fragment {
        std::vector<int> attach;
        int component = -1; // -1 for a chord
    };

    while (hEdges.size() < total) {
        std::vector<bool> outside(m);
        for (int v = 0; v < m; ++v)
            outside[v] = !inH[v];
        int ncomp = 0;
        std::vector<int> comp = component_ids(B, outside, &ncomp);
        std::vector<Fragment> frags(ncomp);
        for (int c = 0; c < ncomp; ++c)
            frags[c].component = c;
        for (int v = 0; v < m; ++v)
            if (comp[v] >= 0)
                for (int u : B.adj[v])
                    if (inH[u])
                        frags[comp[v]].attach.push_back(u);
        for (auto& f : frags)
            f.attach = normalized(std::move(f.attach));
        for (int v = 0; v < m; ++v)
            if (inH[v])
                for (int u : B.adj[v])
                    if (v < u && inH[u] && !hEdges.count({v, u}))
                        frags.push_back({{v, u}, -1});

        std::vector<std::vector<int>> faceSets;
        for (const auto& f : faces)
            faceSets.push_back(normalized(f));
        // a fragment with a single admissible face goes first
        int chosen = -1;
        int chosenFace = -1;
        for (std::size_t i = 0; i < frags.size(); ++i) {
            std::vector<int> ok;
            for (std::size_t fi = 0; fi < faces.size(); ++fi)
                if (is_subset(frags[i].attach, faceSets[fi]))
                    ok.push_back(static_cast<int>(fi));
            if (ok.empty())
                return std::nullopt;
            if (chosen < 0 || (ok.size() == 1 && chosenFace < 0)) {
                chosen = static_cast<int>(i);
                chosenFace = ok.size() == 1 ? ok.front() : -1 - ok.front();
            }
        }
        if (chosenFace < 0)
            chosenFace = -1 - chosenFace;

        const Fragment& frag = frags[chosen];
        std::vector<int> path;
        if (frag.component < 0) {
            path = frag.attach;
        } else {
            const int a = frag.attach.front();
            std::vector<int> par(m, -2);
            std::deque<int> q;
            for (int u : B.adj[a])
                if (comp[u] == frag.component) {
                    par[u] = a;
                    q.push_back(u);
                }
            int endInside = -1, endAttach = -1;
            while (!q.empty() && endInside < 0) {
                int v = q.front();
                q.pop_front();
                for (int u : B.adj[v])
                    if (inH[u] && u != a) {
                        endInside = v;
                        endAttach = u;
                        break;
                    }
                if (endInside >= 0)
                    break;
                for (int u : B.adj[v])
                    if (comp[u] == frag.component && par[u] == -2) {
                        par[u] = v;
                        q.push_back(u);
                    }
            }
            if (endInside < 0)
                return std::nullopt;
            path.push_back(endAttach);
            for (int v = endInside; v != a; v = par[v])
                path.push_back(v);
            path.push_back(a);
            std::reverse(path.begin(), path.end());
        }

        // split the chosen face along the path
        const std::vector<int> f = faces[chosenFace];
        const std::size_t L = f.size();
        const std::size_t i = static_cast<std::size_t>(std::find(f.begin(), f.end(), path.front()) - f.begin());
        const std::size_t j = static_cast<std::size_t>(std::find(f.begin(), f.end(), path.back()) - f.begin());
        std::vector<int> f1, f2;
        for (std::size_t t = i;; t = (t + 1) % L) {
            f1.push_back(f[t]);
            if (t == j)
                break;
        }
        for (std::size_t t = path.size() - 2; t >= 1; --t)
            f1.push_back(path[t]);
        for (std::size_t t = j;; t = (t + 1) % L) {
            f2.push_back(f[t]);
            if (t == i)
                break;
        }
        for (std::size_t t = 1; t + 1 < path.size(); ++t)
            f2.push_back(path[t]);
        faces[chosenFace] = std::move(f1);
        faces.push_back(std::move(f2));
        for (std::size_t t = 0; t < path.size(); ++t) {
            inH[path[t]] = true;
            if (t + 1 < path.size())
                hEdges.insert(key(path[t], path[t + 1]));
        }
    }
    return faces;
}

/// Cyclic neighbor order from oriented faces: the corner x→v→y gives succ_v(x) = y.
inline std::vector<std::vector<int>> rotation_from_faces(int n, const std::vector<std::vector<int>>& faces)
{
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : faces) {
        const std::size_t L = f.size();
        for (std::size_t i = 0; i < L; ++i)
            succ[f[i]][f[(i + L - 1) % L]] = f[(i + 1) % L];
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty())
            continue;
        int start = succ[v].begin()->first;
        int x = start;
        do {
            rot[v].push_back(x);
            x = succ[v].at(x);
        } while (x != start && rot[v].size() <= succ[v].size());
    }
    return rot;
}

inline int rotation_next(const std::vector<int>& r, int u)
{
    auto it = std::find(r.begin(), r.end(), u);
    ++it;
    return it == r.end() ? r.front() : *it;
}

/// Faces of a rotation system: the dart u→v is followed by v→succ_v(u).
inline std::vector<std::vector<int>> trace_faces(const Rotation& rot)
{
    std::set<Edge> used;
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < static_cast<int>(rot.size()); ++u)
        for (int v : rot[u]) {
            if (used.count({u, v}))
                continue;
            std::vector<int> face;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                face.push_back(a);
                int c = rotation_next(rot[b], a);
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

} // namespace detail

/// A planar rotation system for G, or nullopt when G is not planar.
inline std::optional<Rotation> planar_rotation(const Graph& G)
{
    if (G.n >= 3 && G.num_edges() > static_cast<std::size_t>(3 * G.n - 6))
        return std::nullopt;
    Rotation rot(G.n);
    for (const auto& block : biconnected_blocks(G)) {
        if (block.size() == 1) {
            rot[block[0].first].push_back(block[0].second);
            rot[block[0].second].push_back(block[0].first);
            continue;
        }
        std::vector<int> verts;
        for (auto [a, b] : block) {
            verts.push_back(a);
            verts.push_back(b);
        }
        verts = normalized(std::move(verts));
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        std::vector<Edge> ledges;
        for (auto [a, b] : block)
            ledges.emplace_back(local(a), local(b));
        Graph B(static_cast<int>(verts.size()), ledges);
        auto faces = detail::dmp_faces(B);
        if (!faces)
            return std::nullopt;
        auto lrot = detail::rotation_from_faces(B.n, *faces);
        for (int v = 0; v < B.n; ++v)
            for (int u : lrot[v])
                rot[verts[v]].push_back(verts[u]);
    }
    return rot;
}

inline bool is_planar(const Graph& G)
{
    return planar_rotation(G).has_value();
}

namespace detail {

inline __int128 orient(const GridPoint& a, const GridPoint& b, const GridPoint& c)
{
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

inline bool on_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p)
{
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Integer shift-method drawing of one connected component with >= 3 vertices.
/// `verts` are global indices; `rot` is a global planar rotation system.
inline std::vector<GridPoint> draw_component(const std::vector<int>& verts, const Rotation& rot)
{
    const int m = static_cast<int>(verts.size());
    std::map<int, int> local;
    for (int i = 0; i < m; ++i)
        local[verts[i]] = i;
    Rotation lrot(m);
    for (int i = 0; i < m; ++i)
        for (int u : rot[verts[i]])
            lrot[i].push_back(local.at(u));

    // triangulate every face with auxiliary vertices
    int N = m;
    std::vector<std::array<int, 3>> tris;
    for (const auto& w : trace_faces(lrot)) {
        const int k = static_cast<int>(w.size());
        if (k == 3) {
            tris.push_back({w[0], w[1], w[2]});
            continue;
        }
        if (static_cast<int>(normalized(w).size()) == k) {
            int d = N++;
            for (int i = 0; i < k; ++i)
                tris.push_back({w[i], w[(i + 1) % k], d});
            continue;
        }
        int base = N;
        N += k;
        int d = N++;
        for (int i = 0; i < k; ++i) {
            int ci = base + i, cn = base + (i + 1) % k;
            tris.push_back({w[i], w[(i + 1) % k], ci});
            tris.push_back({ci, w[(i + 1) % k], cn});
            tris.push_back({ci, cn, d});
        }
    }
    std::vector<std::vector<int>> triFaces;
    for (const auto& t : tris)
        triFaces.push_back({t[0], t[1], t[2]});
    Rotation trot = rotation_from_faces(N, triFaces);
    std::vector<std::set<int>> nbr(N);
    for (int v = 0; v < N; ++v)
        nbr[v].insert(trot[v].begin(), trot[v].end());

    // canonical ordering by peeling the outer face
    const int v1 = tris[0][0], v2 = tris[0][1], vn = tris[0][2];
    std::vector<bool> alive(N, true), outer(N, false);
    std::vector<int> path{v1, vn, v2};
    for (int v : path)
        outer[v] = true;
    std::vector<int> order(N, -1);
    for (int k = N - 1; k >= 3; --k) {
        int pick = -1;
        for (std::size_t i = 1; i + 1 < path.size() && pick < 0; ++i) {
            int v = path[i];
            bool chordFree = true;
            for (int u : nbr[v])
                if (alive[u] && outer[u] && u != path[i - 1] && u != path[i + 1]) {
                    chordFree = false;
                    break;
                }
            if (chordFree)
                pick = static_cast<int>(i);
        }
        if (pick < 0)
            throw VerificationFailed("canonical ordering found no removable vertex");
        const int v = path[pick];
        const int prev = path[pick - 1], next = path[pick + 1];
        order[k] = v;
        alive[v] = false;
        outer[v] = false;
        const auto& r = trot[v];
        const std::size_t deg = r.size();
        const std::size_t p = static_cast<std::size_t>(std::find(r.begin(), r.end(), prev) - r.begin());
        const std::size_t q = static_cast<std::size_t>(std::find(r.begin(), r.end(), next) - r.begin());
        std::vector<int> arcA, arcB;
        for (std::size_t t = (p + 1) % deg; t != q; t = (t + 1) % deg)
            arcA.push_back(r[t]);
        for (std::size_t t = (q + 1) % deg; t != p; t = (t + 1) % deg)
            arcB.push_back(r[t]);
        auto anyAlive = [&](const std::vector<int>& arc) {
            return std::any_of(arc.begin(), arc.end(), [&](int u) { return alive[u]; });
        };
        std::vector<int> arc;
        if (anyAlive(arcA))
            arc = arcA;
        else if (anyAlive(arcB))
            arc.assign(arcB.rbegin(), arcB.rend());
        for (int u : arc)
            if (!alive[u] || outer[u])
                throw VerificationFailed("canonical ordering met an inconsistent outer face");
        std::vector<int> nextPath(path.begin(), path.begin() + pick);
        nextPath.insert(nextPath.end(), arc.begin(), arc.end());
        nextPath.insert(nextPath.end(), path.begin() + pick + 1, path.end());
        for (int u : arc)
            outer[u] = true;
        path = std::move(nextPath);
    }
    if (path.size() != 3)
        throw VerificationFailed("canonical ordering did not end at a triangle");
    order[0] = v1;
    order[1] = v2;
    order[2] = path[1];

    // shift method
    std::vector<int> rank(N);
    for (int k = 0; k < N; ++k)
        rank[order[k]] = k;
    std::vector<long long> x(N, 0), y(N, 0);
    std::vector<std::vector<int>> under(N);
    x[v1] = 0, y[v1] = 0;
    x[v2] = 2, y[v2] = 0;
    x[order[2]] = 1, y[order[2]] = 1;
    for (int v : {v1, v2, order[2]})
        under[v] = {v};
    std::vector<int> contour{v1, order[2], v2};
    for (int k = 3; k < N; ++k) {
        const int v = order[k];
        int p = -1, q = -1, count = 0, placed = 0;
        for (int i = 0; i < static_cast<int>(contour.size()); ++i)
            if (nbr[v].count(contour[i])) {
                if (p < 0)
                    p = i;
                q = i;
                ++count;
            }
        for (int u : nbr[v])
            if (rank[u] < k)
                ++placed;
        if (p < 0 || q - p + 1 != count || count != placed || count < 2)
            throw VerificationFailed("shift method met a non-contiguous neighborhood");
        for (int i = p + 1; i < q; ++i)
            for (int u : under[contour[i]])
                x[u] += 1;
        for (int i = q; i < static_cast<int>(contour.size()); ++i)
            for (int u : under[contour[i]])
                x[u] += 2;
        const int wp = contour[p], wq = contour[q];
        x[v] = (x[wp] + x[wq] + y[wq] - y[wp]) / 2;
        y[v] = (x[wq] - x[wp] + y[wq] + y[wp]) / 2;
        under[v] = {v};
        for (int i = p + 1; i < q; ++i)
            under[v].insert(under[v].end(), under[contour[i]].begin(), under[contour[i]].end());
        std::vector<int> nextContour(contour.begin(), contour.begin() + p + 1);
        nextContour.push_back(v);
        nextContour.insert(nextContour.end(), contour.begin() + q, contour.end());
        contour = std::move(nextContour);
    }
    std::vector<GridPoint> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = {x[i], y[i]};
    return out;
}

} // namespace detail

/// Exact check: distinct vertex positions, no vertex inside a non-incident
/// edge, and no two edges without common endpoint crossing.
inline bool verify_drawing(const Graph& G, const PlanarDrawing& D)
{
    if (static_cast<int>(D.position.size()) != G.n)
        return false;
    const auto& P = D.position;
    std::set<GridPoint> distinct(P.begin(), P.end());
    if (static_cast<int>(distinct.size()) != G.n)
        return false;
    auto edges = G.edges();
    for (auto [a, b] : edges)
        for (int w = 0; w < G.n; ++w)
            if (w != a && w != b && detail::on_segment(P[a], P[b], P[w]))
                return false;
    auto sign = [](__int128 v) { return (v > 0) - (v < 0); };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                continue;
            int s1 = sign(detail::orient(P[a], P[b], P[c]));
            int s2 = sign(detail::orient(P[a], P[b], P[d]));
            int s3 = sign(detail::orient(P[c], P[d], P[a]));
            int s4 = sign(detail::orient(P[c], P[d], P[b]));
            if (s1 * s2 < 0 && s3 * s4 < 0)
                return false;
        }
    return true;
}

/// Checks that the certificate is a subdivision of K5 or K3,3 inside G.
inline bool verify_kuratowski(const Graph& G, const KuratowskiSubgraph& K)
{
    const std::size_t nb = K.kind == KuratowskiKind::K5 ? 5 : 6;
    if (K.branch.size() != nb)
        return false;
    std::set<int> branch(K.branch.begin(), K.branch.end());
    if (branch.size() != nb)
        return false;
    for (int b : K.branch)
        if (b < 0 || b >= G.n)
            return false;
    auto pos = [&](int v) {
        return static_cast<int>(std::find(K.branch.begin(), K.branch.end(), v) - K.branch.begin());
    };
    std::set<std::pair<int, int>> pairs;
    std::set<int> interior;
    for (const auto& p : K.paths) {
        if (p.size() < 2 || !branch.count(p.front()) || !branch.count(p.back()) || p.front() == p.back())
            return false;
        int i = pos(p.front()), j = pos(p.back());
        if (K.kind == KuratowskiKind::K33 && (i < 3) == (j < 3))
            return false;
        if (!pairs.insert({std::min(i, j), std::max(i, j)}).second)
            return false;
        for (std::size_t t = 0; t + 1 < p.size(); ++t)
            if (!G.has_edge(p[t], p[t + 1]))
                return false;
        for (std::size_t t = 1; t + 1 < p.size(); ++t)
            if (branch.count(p[t]) || !interior.insert(p[t]).second)
                return false;
    }
    return pairs.size() == (K.kind == KuratowskiKind::K5 ? 10U : 9U);
}

namespace detail {

inline KuratowskiSubgraph extract_kuratowski(const Graph& G)
{
    std::vector<Edge> kept = G.edges();
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Edge> trial = kept;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (!is_planar(Graph(G.n, trial)))
            kept = std::move(trial);
        else
            ++i;
    }
    Graph H(G.n, kept);
    std::vector<int> branch;
    for (int v = 0; v < H.n; ++v)
        if (H.degree(v) >= 3)
            branch.push_back(v);
    KuratowskiSubgraph out;
    if (branch.size() == 5 && std::all_of(branch.begin(), branch.end(), [&](int v) { return H.degree(v) == 4; }))
        out.kind = KuratowskiKind::K5;
    else if (branch.size() == 6 && std::all_of(branch.begin(), branch.end(), [&](int v) { return H.degree(v) == 3; }))
        out.kind = KuratowskiKind::K33;
    else
        throw VerificationFailed("minimal non-planar subgraph is neither K5 nor K3,3");
    std::set<int> isBranch(branch.begin(), branch.end());
    std::vector<std::vector<int>> paths;
    for (int b : branch)
        for (int first : H.adj[b]) {
            std::vector<int> p{b, first};
            while (!isBranch.count(p.back())) {
                int cur = p.back(), prev = p[p.size() - 2];
                int nxt = H.adj[cur][0] == prev ? H.adj[cur][1] : H.adj[cur][0];
                p.push_back(nxt);
            }
            if (b < p.back())
                paths.push_back(std::move(p));
        }
    if (out.kind == KuratowskiKind::K33) {
        // side of the smallest branch vertex first
        std::vector<int> sideA{branch.front()}, sideB;
        for (const auto& p : paths)
            if (p.front() == branch.front())
                sideB.push_back(p.back());
        for (int b : branch)
            if (b != branch.front() && std::find(sideB.begin(), sideB.end(), b) == sideB.end())
                sideA.push_back(b);
        std::sort(sideA.begin(), sideA.end());
        std::sort(sideB.begin(), sideB.end());
        branch = sideA;
        branch.insert(branch.end(), sideB.begin(), sideB.end());
    }
    auto pos = [&](int v) { return std::find(branch.begin(), branch.end(), v) - branch.begin(); };
    for (auto& p : paths)
        if (pos(p.front()) > pos(p.back()))
            std::reverse(p.begin(), p.end());
    std::sort(paths.begin(), paths.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        return std::pair(pos(a.front()), pos(a.back())) < std::pair(pos(b.front()), pos(b.back()));
    });
    out.branch = std::move(branch);
    out.paths = std::move(paths);
    return out;
}

} // namespace detail

/// Either a verified integer straight-line drawing or a verified Kuratowski subdivision.
inline PlanarityResult planar_embed(const Graph& G, const Guards& guards = {})
{
    if (G.num_edges() > guards.max_faces || static_cast<std::size_t>(G.n) > guards.max_faces)
        throw GuardExceeded("graph too large for the planarity routine");
    PlanarityResult result;
    auto rot = planar_rotation(G);
    if (!rot) {
        result.obstruction = detail::extract_kuratowski(G);
        if (!verify_kuratowski(G, *result.obstruction))
            throw VerificationFailed("Kuratowski certificate failed its replay");
        return result;
    }
    int ncomp = 0;
    std::vector<int> comp = component_ids(G, &ncomp);
    PlanarDrawing D;
    D.position.resize(G.n);
    long long offset = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < G.n; ++v)
            if (comp[v] == c)
                verts.push_back(v);
        std::vector<GridPoint> local;
        if (verts.size() == 1)
            local = {{0, 0}};
        else if (verts.size() == 2)
            local = {{0, 0}, {1, 0}};
        else {
            std::size_t edges = 0;
            for (int v : verts)
                edges += G.adj[v].size();
            edges /= 2;
            std::size_t faces = detail::trace_faces([&] {
                Rotation sub(G.n);
                for (int v : verts)
                    sub[v] = (*rot)[v];
                return sub;
            }()).size();
            if (static_cast<long>(verts.size()) - static_cast<long>(edges) + static_cast<long>(faces) != 2)
                throw VerificationFailed("embedding violates Euler's formula");
            local = detail::draw_component(verts, *rot);
        }
        long long width = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            D.position[verts[i]] = {local[i].x + offset, local[i].y};
            width = std::max(width, local[i].x);
        }
        offset += width + 2;
    }
    if (!verify_drawing(G, D))
        throw VerificationFailed("planar drawing failed the crossing check");
    result.drawing = std::move(D);
    return result;
}

} // namespace drep
