#pragma once

// Slow, independent reference implementations used to cross-check the
// library. They work on plain std::set data and share no code with drep
// beyond reading a complex's labels and facets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "drep/complex.hpp"
#include "drep/rational.hpp"

namespace oracle {

using LSet = std::set<std::string>;
using ISet = std::set<int>;

inline std::vector<LSet> facet_sets(const drep::SimplicialComplex& K)
{
    std::vector<LSet> out;
    for (const auto& f : K.facets()) {
        auto l = K.labels(f);
        out.emplace_back(l.begin(), l.end());
    }
    return out;
}

inline bool subset(const LSet& a, const LSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_face(const std::vector<LSet>& facets, const LSet& s)
{
    for (const auto& f : facets)
        if (subset(s, f))
            return true;
    return false;
}

inline LSet meet(const std::vector<LSet>& facets, const ISet& idx)
{
    LSet acc = facets.at(*idx.begin());
    for (int i : idx) {
        LSet next;
        std::set_intersection(acc.begin(), acc.end(), facets[i].begin(), facets[i].end(),
                              std::inserter(next, next.end()));
        acc = std::move(next);
    }
    return acc;
}

inline std::vector<ISet> subsets_of(int n)
{
    std::vector<ISet> out;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        ISet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U)
                s.insert(i);
        out.push_back(std::move(s));
    }
    return out;
}

/// Faces of the nerve of the facets, as sets of facet indices.
inline std::vector<ISet> dual_faces(const std::vector<LSet>& facets)
{
    std::vector<ISet> out;
    for (auto& s : subsets_of(static_cast<int>(facets.size())))
        if (!meet(facets, s).empty())
            out.push_back(std::move(s));
    return out;
}

/// Maximal faces of the nerve, each written as a set of facets (label sets).
inline std::set<std::set<LSet>> dual_facets(const drep::SimplicialComplex& K)
{
    auto facets = facet_sets(K);
    auto faces = dual_faces(facets);
    std::set<std::set<LSet>> out;
    for (const auto& s : faces) {
        bool maximal = true;
        for (const auto& t : faces)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                maximal = false;
        if (maximal) {
            std::set<LSet> x;
            for (int i : s)
                x.insert(facets[i]);
            out.insert(std::move(x));
        }
    }
    return out;
}

/// All nonempty faces as label sets.
inline std::set<LSet> label_faces(const drep::SimplicialComplex& K)
{
    std::set<LSet> out;
    for (const auto& f : facet_sets(K)) {
        std::vector<std::string> v(f.begin(), f.end());
        for (std::uint32_t mask = 1; mask < (1U << v.size()); ++mask) {
            LSet s;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask >> i & 1U)
                    s.insert(v[i]);
            out.insert(std::move(s));
        }
    }
    return out;
}

/// Reduced Z/2 Betti numbers through dense elimination of boundary matrices.
inline std::vector<long> betti(const drep::SimplicialComplex& K)
{
    auto faces = label_faces(K);
    int top = 0;
    for (const auto& f : faces)
        top = std::max(top, static_cast<int>(f.size()) - 1);
    std::vector<std::vector<LSet>> by_dim(top + 2);
    for (const auto& f : faces)
        by_dim[f.size() - 1].push_back(f);
    auto rank = [&](int k) -> long { // rank of ∂_k : C_k → C_{k-1}, augmented at k = 0
        if (k < 0 || k > top)
            return 0;
        const auto& rows = by_dim[k];
        if (k == 0)
            return rows.empty() ? 0 : 1;
        std::map<LSet, int> index;
        for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i)
            index[by_dim[k - 1][i]] = static_cast<int>(i);
        std::vector<std::vector<char>> M(rows.size(), std::vector<char>(by_dim[k - 1].size(), 0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& v : rows[r]) {
                LSet b = rows[r];
                b.erase(v);
                M[r][index.at(b)] = 1;
            }
        long rk = 0;
        const std::size_t cols = by_dim[k - 1].size();
        for (std::size_t c = 0; c < cols && rk < static_cast<long>(M.size()); ++c) {
            std::size_t piv = rk;
            while (piv < M.size() && !M[piv][c])
                ++piv;
            if (piv == M.size())
                continue;
            std::swap(M[piv], M[rk]);
            for (std::size_t r = 0; r < M.size(); ++r)
                if (r != static_cast<std::size_t>(rk) && M[r][c])
                    for (std::size_t j = 0; j < cols; ++j)
                        M[r][j] ^= M[rk][j];
            ++rk;
        }
        return rk;
    };
    std::vector<long> out;
    for (int k = 0; k <= top; ++k)
        out.push_back(static_cast<long>(by_dim[k].size()) - rank(k) - rank(k + 1));
    return out;
}

/// Plain backtracking over facet orders: each vertex's facets must be
/// contiguous. No memoization.
inline bool has_consecutive_arrangement(const drep::SimplicialComplex& K)
{
    auto facets = facet_sets(K);
    const std::size_t m = facets.size();
    std::vector<int> order;
    std::vector<bool> used(m, false);
    auto ok = [&]() {
        LSet closed, open;
        for (std::size_t t = 0; t < order.size(); ++t) {
            const LSet& f = facets[order[t]];
            for (const auto& v : f)
                if (closed.count(v))
                    return false;
            for (const auto& v : open)
                if (!f.count(v))
                    closed.insert(v);
            open = f;
        }
        return true;
    };
    auto go = [&](auto&& self) -> bool {
        if (!ok())
            return false;
        if (order.size() == m)
            return true;
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j])
                continue;
            used[j] = true;
            order.push_back(static_cast<int>(j));
            if (self(self))
                return true;
            order.pop_back();
            used[j] = false;
        }
        return false;
    };
    return go(go);
}

/// Every cell (α, β) of the configuration space, in facet indices.
inline std::set<std::pair<ISet, ISet>> config_cells(const drep::SimplicialComplex& K)
{
    auto facets = facet_sets(K);
    auto faces = dual_faces(facets);
    std::set<std::pair<ISet, ISet>> out;
    for (const auto& a : faces)
        for (const auto& b : faces) {
            LSet u = meet(facets, a);
            LSet w = meet(facets, b);
            u.insert(w.begin(), w.end());
            if (!is_face(facets, u))
                out.insert({a, b});
        }
    return out;
}

/// Every cell of the deleted product: pairs of disjoint nonempty faces.
inline std::set<std::pair<LSet, LSet>> deleted_cells(const drep::SimplicialComplex& L)
{
    auto faces = label_faces(L);
    std::set<std::pair<LSet, LSet>> out;
    for (const auto& a : faces)
        for (const auto& b : faces) {
            LSet both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.end()));
            if (both.empty())
                out.insert({a, b});
        }
    return out;
}

/// Exhaustive d-collapse search without memoization.
inline bool collapsible(const std::vector<LSet>& facets, int d)
{
    if (facets.empty())
        return true;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        std::vector<std::string> v(facets[j].begin(), facets[j].end());
        for (std::uint32_t mask = 1; mask < (1U << v.size()); ++mask) {
            LSet F;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask >> i & 1U)
                    F.insert(v[i]);
            if (static_cast<int>(F.size()) > d)
                continue;
            int holders = 0;
            for (const auto& g : facets)
                holders += subset(F, g);
            if (holders != 1)
                continue;
            std::set<LSet> next;
            for (std::size_t k = 0; k < facets.size(); ++k)
                if (k != j)
                    next.insert(facets[k]);
            for (const auto& x : F) {
                LSet s = facets[j];
                s.erase(x);
                if (!s.empty())
                    next.insert(s);
            }
            std::vector<LSet> top;
            for (const auto& s : next) {
                bool covered = false;
                for (const auto& t : next)
                    if (t != s && subset(s, t))
                        covered = true;
                if (!covered)
                    top.push_back(s);
            }
            if (collapsible(top, d))
                return true;
        }
    }
    return false;
}

/// Every induced subcomplex has vanishing reduced homology from dimension d up.
inline bool leray(const drep::SimplicialComplex& K, int d)
{
    auto facets = facet_sets(K);
    const auto& V = K.vertices();
    for (std::uint32_t mask = 1; mask < (1U << V.size()); ++mask) {
        LSet W;
        for (std::size_t i = 0; i < V.size(); ++i)
            if (mask >> i & 1U)
                W.insert(V[i]);
        std::vector<std::vector<std::string>> raw;
        for (const auto& f : facets) {
            std::vector<std::string> g;
            std::set_intersection(f.begin(), f.end(), W.begin(), W.end(), std::back_inserter(g));
            if (!g.empty())
                raw.push_back(std::move(g));
        }
        auto b = betti(drep::build_complex(raw));
        for (std::size_t k = static_cast<std::size_t>(d); k < b.size(); ++k)
            if (b[k] != 0)
                return false;
    }
    return true;
}

inline bool planar(int n, const std::vector<std::pair<int, int>>& edges)
{
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    G g(n);
    for (auto [u, v] : edges)
        boost::add_edge(u, v, g);
    return boost::boyer_myrvold_planarity_test(g);
}

// ------------------------------------------------ Fourier-Motzkin feasibility

/// Whether the convex hulls of the given point sets share a point. The
/// system Σλ_s p_s = Σλ_1 p_1, Σλ_s = 1, λ ≥ 0 is solved by exact
/// substitution of equalities and Fourier-Motzkin elimination of the rest.
inline bool hulls_meet(const std::vector<std::vector<std::vector<drep::Rational>>>& sets)
{
    using drep::Rational;
    struct Row {
        std::vector<Rational> a;
        Rational b;
        bool eq;
    };
    std::vector<int> offset;
    int nvars = 0;
    for (const auto& s : sets) {
        offset.push_back(nvars);
        nvars += static_cast<int>(s.size());
    }
    const std::size_t dim = sets.front().front().size();
    std::vector<Row> rows;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        Row sum{std::vector<Rational>(nvars), Rational(1), true};
        for (std::size_t i = 0; i < sets[s].size(); ++i) {
            sum.a[offset[s] + i] = 1;
            Row pos{std::vector<Rational>(nvars), Rational(0), false};
            pos.a[offset[s] + i] = -1;
            rows.push_back(pos);
        }
        rows.push_back(sum);
        if (s == 0)
            continue;
        for (std::size_t k = 0; k < dim; ++k) {
            Row r{std::vector<Rational>(nvars), Rational(0), true};
            for (std::size_t i = 0; i < sets[s].size(); ++i)
                r.a[offset[s] + i] += sets[s][i][k];
            for (std::size_t i = 0; i < sets[0].size(); ++i)
                r.a[offset[0] + i] -= sets[0][i][k];
            rows.push_back(r);
        }
    }
    for (int x = 0; x < nvars; ++x) {
        auto pivot = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.eq && r.a[x] != 0; });
        std::vector<Row> next;
        if (pivot != rows.end()) {
            Row p = *pivot;
            for (auto& r : rows) {
                if (&r == &*pivot)
                    continue;
                if (r.a[x] != 0) {
                    Rational f = r.a[x] / p.a[x];
                    for (int j = 0; j < nvars; ++j)
                        r.a[j] -= f * p.a[j];
                    r.b -= f * p.b;
                }
                next.push_back(r);
            }
        } else {
            std::vector<Row> pos, neg;
            for (auto& r : rows) {
                if (r.a[x] > 0)
                    pos.push_back(r);
                else if (r.a[x] < 0)
                    neg.push_back(r);
                else
                    next.push_back(r);
            }
            for (const auto& p : pos)
                for (const auto& n : neg) {
                    Row c{std::vector<Rational>(nvars), Rational(0), false};
                    Rational fp = -n.a[x], fn = p.a[x];
                    for (int j = 0; j < nvars; ++j)
                        c.a[j] = fp * p.a[j] + fn * n.a[j];
                    c.b = fp * p.b + fn * n.b;
                    next.push_back(c);
                }
        }
        // drop duplicate rows to keep the elimination small
        std::sort(next.begin(), next.end(), [](const Row& l, const Row& r) {
            if (l.eq != r.eq)
                return l.eq < r.eq;
            if (l.a != r.a)
                return l.a < r.a;
            return l.b < r.b;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Row& l, const Row& r) { return l.eq == r.eq && l.a == r.a && l.b == r.b; }),
                   next.end());
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.eq ? r.b != 0 : r.b < 0)
            return false;
    return true;
}

} // namespace oracle
