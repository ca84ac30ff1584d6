#pragma once

/**
 * Exact convex geometry over the rationals: hull intersection by LP
 * feasibility, nerves of hull families, linear realizations of the dual and
 * the faithfulness test.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drep/complex.hpp"
#include "drep/lp.hpp"

namespace drep {

using QPoint = std::vector<Rational>;
using PointSet = std::vector<QPoint>;

/// One named generator set per vertex; each stands for its convex hull.
using HullFamily = std::vector<std::pair<VertexLabel, PointSet>>;

/// A point p_J for every facet J, keyed by the facet's labels.
struct LinearRealization {
    int d = 1;
    std::vector<std::pair<std::vector<VertexLabel>, QPoint>> points;
};

namespace detail {

inline std::size_t common_dimension(const std::vector<PointSet>& sets)
{
    if (sets.empty())
        throw InputError(Errc::EmptyInput, "no point sets");
    std::optional<std::size_t> dim;
    for (const auto& s : sets) {
        if (s.empty())
            throw InputError(Errc::EmptyInput, "empty point set");
        for (const auto& p : s) {
            if (!dim)
                dim = p.size();
            else if (*dim != p.size())
                throw InputError(Errc::DimensionMismatch, "points of different dimensions");
        }
    }
    return *dim;
}

} // namespace detail

/// A point common to all hulls, or nullopt when they do not meet.
inline std::optional<QPoint> hulls_common_point(const std::vector<PointSet>& sets)
{
    const std::size_t dim = detail::common_dimension(sets);
    std::vector<std::size_t> offset;
    std::size_t vars = 0;
    for (const auto& s : sets) {
        offset.push_back(vars);
        vars += s.size();
    }
    RationalMatrix A;
    std::vector<Rational> b;
    for (std::size_t t = 0; t < sets.size(); ++t) {
        std::vector<Rational> row(vars);
        for (std::size_t p = 0; p < sets[t].size(); ++p)
            row[offset[t] + p] = 1;
        A.push_back(std::move(row));
        b.emplace_back(1);
    }
    for (std::size_t t = 1; t < sets.size(); ++t)
        for (std::size_t c = 0; c < dim; ++c) {
            std::vector<Rational> row(vars);
            for (std::size_t p = 0; p < sets[0].size(); ++p)
                row[p] += sets[0][p][c];
            for (std::size_t p = 0; p < sets[t].size(); ++p)
                row[offset[t] + p] -= sets[t][p][c];
            A.push_back(std::move(row));
            b.emplace_back(0);
        }
    auto lambda = lp_feasible_point(A, b);
    if (!lambda)
        return std::nullopt;
    QPoint x(dim);
    for (std::size_t p = 0; p < sets[0].size(); ++p)
        for (std::size_t c = 0; c < dim; ++c)
            x[c] += (*lambda)[p] * sets[0][p][c];
    return x;
}

inline bool hulls_intersect(const std::vector<PointSet>& sets)
{
    return hulls_common_point(sets).has_value();
}

/// Nerve of the hulls, built level by level: a name set is tested only when
/// all its one-smaller subsets already meet.
inline SimplicialComplex nerve_of_hulls(const HullFamily& family)
{
    std::vector<VertexLabel> names;
    std::vector<PointSet> sets;
    for (const auto& [name, pts] : family) {
        if (!valid_label(name))
            throw InputError(Errc::BadLabel, "malformed set name '" + name + "'");
        if (pts.empty())
            continue;
        names.push_back(name);
        sets.push_back(pts);
    }
    if (sets.empty())
        return {};
    detail::common_dimension(sets);

    std::vector<Face> faces;
    std::vector<Face> level;
    for (std::size_t i = 0; i < sets.size(); ++i)
        level.push_back({static_cast<int>(i)});
    while (!level.empty()) {
        faces.insert(faces.end(), level.begin(), level.end());
        std::set<Face> present(level.begin(), level.end());
        std::vector<Face> next;
        for (std::size_t a = 0; a < level.size(); ++a)
            for (std::size_t c = a + 1; c < level.size(); ++c) {
                const Face& f = level[a];
                const Face& g = level[c];
                if (!std::equal(f.begin(), f.end() - 1, g.begin()))
                    break; // level is sorted, so shared prefixes are contiguous
                Face cand = f;
                cand.push_back(g.back());
                bool closed = true;
                for (std::size_t drop = 0; drop + 2 < cand.size() && closed; ++drop) {
                    Face sub = cand;
                    sub.erase(sub.begin() + static_cast<long>(drop));
                    closed = present.count(sub) > 0;
                }
                if (!closed)
                    continue;
                std::vector<PointSet> chosen;
                for (int i : cand)
                    chosen.push_back(sets[i]);
                if (hulls_intersect(chosen))
                    next.push_back(std::move(cand));
            }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return SimplicialComplex::from_indexed(names, std::move(faces));
}

/// Points indexed like K.facets(); FacetMismatch unless R covers M(K) exactly.
inline std::vector<QPoint> realization_points(const SimplicialComplex& K, const LinearRealization& R)
{
    if (R.d < 1)
        throw InputError(Errc::DimensionMismatch, "realization dimension must be at least 1");
    std::vector<std::optional<QPoint>> slot(K.num_facets());
    for (const auto& [labels, p] : R.points) {
        if (static_cast<int>(p.size()) != R.d)
            throw InputError(Errc::DimensionMismatch, "point with " + std::to_string(p.size()) +
                                                          " coordinates in a d=" + std::to_string(R.d) + " realization");
        Face f;
        for (const auto& l : labels) {
            auto v = K.find(l);
            if (!v)
                throw InputError(Errc::FacetMismatch, "realization names unknown vertex '" + l + "'");
            f.push_back(*v);
        }
        f = normalized(std::move(f));
        auto it = std::lower_bound(K.facets().begin(), K.facets().end(), f);
        if (it == K.facets().end() || *it != f)
            throw InputError(Errc::FacetMismatch, "realization point for a non-facet");
        auto j = static_cast<std::size_t>(it - K.facets().begin());
        if (slot[j])
            throw InputError(Errc::FacetMismatch, "facet given two points");
        slot[j] = p;
    }
    std::vector<QPoint> out;
    for (std::size_t j = 0; j < slot.size(); ++j) {
        if (!slot[j])
            throw InputError(Errc::FacetMismatch, "no point for a facet");
        out.push_back(*slot[j]);
    }
    return out;
}

/// C_i = {p_J : J ∈ cont_i} for each vertex i.
inline HullFamily convex_sets_of(const SimplicialComplex& K, const LinearRealization& R)
{
    auto pts = realization_points(K, R);
    HullFamily out;
    for (std::size_t v = 0; v < K.num_vertices(); ++v) {
        PointSet s;
        for (int j : K.facets_containing(Face{static_cast<int>(v)}))
            s.push_back(pts[j]);
        out.emplace_back(K.vertices()[v], std::move(s));
    }
    return out;
}

/// nullopt when no minimal non-face has meeting hulls; otherwise the first one.
inline std::optional<Face> is_faithful(const SimplicialComplex& K, const LinearRealization& R, const Guards& guards = {})
{
    HullFamily family = convex_sets_of(K, R);
    for (const auto& I : minimal_nonfaces(K, guards)) {
        std::vector<PointSet> chosen;
        for (int i : I)
            chosen.push_back(family[i].second);
        if (hulls_intersect(chosen))
            return I;
    }
    return std::nullopt;
}

inline SimplicialComplex realization_nerve(const SimplicialComplex& K, const LinearRealization& R)
{
    return nerve_of_hulls(convex_sets_of(K, R));
}

/// Faithful and nerve-equal: the realization represents K in dimension R.d.
inline bool verify_realization(const SimplicialComplex& K, const LinearRealization& R, const Guards& guards = {})
{
    return !is_faithful(K, R, guards) && realization_nerve(K, R) == K;
}

/// Facet number t (from 1, canonical order) goes to (t, t², …, t^d).
inline LinearRealization moment_curve_realization(const SimplicialComplex& K, int d)
{
    if (d < 1)
        throw InputError(Errc::DimensionMismatch, "moment curve needs d >= 1");
    LinearRealization R;
    R.d = d;
    for (std::size_t j = 0; j < K.num_facets(); ++j) {
        QPoint p;
        Rational t(static_cast<long>(j + 1));
        Rational power = t;
        for (int c = 0; c < d; ++c) {
            p.push_back(power);
            power *= t;
        }
        R.points.emplace_back(K.labels(K.facets()[j]), std::move(p));
    }
    return R;
}

/// The dimension at which a moment-curve realization is always faithful.
inline int moment_curve_bound(const SimplicialComplex& K)
{
    return 2 * dual(K).complex.dimension() + 1;
}

} // namespace drep
