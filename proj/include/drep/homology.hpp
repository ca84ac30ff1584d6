#pragma once

// Reduced homology over the two-element field, and the d-Leray test built on it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "drep/complex.hpp"

namespace drep {

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int top_bit(const Bits& b)
{
    for (std::size_t i = b.size(); i-- > 0;)
        if (b[i])
            return static_cast<int>(i * 64 + 63 - std::countl_zero(b[i]));
    return -1;
}

/// Rank of a GF(2) matrix given by its columns (column reduction on pivots).
inline std::size_t z2_rank(std::vector<Bits> columns)
{
    std::unordered_map<int, std::size_t> pivot;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        Bits& col = columns[c];
        int low = top_bit(col);
        while (low >= 0) {
            auto it = pivot.find(low);
            if (it == pivot.end())
                break;
            const Bits& other = columns[it->second];
            for (std::size_t i = 0; i < col.size(); ++i)
                col[i] ^= other[i];
            low = top_bit(col);
        }
        if (low >= 0) {
            pivot.emplace(low, c);
            ++rank;
        }
    }
    return rank;
}

/// Rank of the boundary map from the faces in `upper` (size k+1) to `lower`
/// (size k). Both lists must be sorted lexicographically.
inline std::size_t boundary_rank(const std::vector<Face>& upper, const std::vector<Face>& lower)
{
    if (upper.empty())
        return 0;
    if (upper.front().size() == 1)
        return 1; // augmentation
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<Bits> cols;
    cols.reserve(upper.size());
    for (const auto& f : upper) {
        Bits col(words, 0);
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face g = f;
            g.erase(g.begin() + static_cast<long>(drop));
            auto it = std::lower_bound(lower.begin(), lower.end(), g);
            auto row = static_cast<std::size_t>(it - lower.begin());
            col[row / 64] ^= std::uint64_t{1} << (row % 64);
        }
        cols.push_back(std::move(col));
    }
    return z2_rank(std::move(cols));
}

/// Reduced Betti numbers of dimensions [from, by_size.size()-1), where
/// by_size[k] lists the faces with k+1 vertices.
inline std::vector<long> reduced_betti(const std::vector<std::vector<Face>>& by_size, int from = 0)
{
    const int top = static_cast<int>(by_size.size()) - 1;
    std::vector<long> out;
    auto rank_at = [&](int k) -> std::size_t {
        // boundary from k-faces to (k-1)-faces; the augmentation when k = 0
        if (k > top || k < 0)
            return 0;
        if (k == 0)
            return by_size[0].empty() ? 0 : 1;
        return boundary_rank(by_size[k], by_size[k - 1]);
    };
    std::size_t next = rank_at(from);
    for (int k = from; k <= top; ++k) {
        std::size_t here = next;
        next = rank_at(k + 1);
        out.push_back(static_cast<long>(by_size[k].size()) - static_cast<long>(here) - static_cast<long>(next));
    }
    return out;
}

inline std::vector<std::vector<Face>> faces_by_size(const std::vector<Face>& faces)
{
    std::vector<std::vector<Face>> by_size;
    for (const auto& f : faces) {
        if (by_size.size() < f.size())
            by_size.resize(f.size());
        by_size[f.size() - 1].push_back(f);
    }
    for (auto& layer : by_size)
        std::sort(layer.begin(), layer.end());
    return by_size;
}

} // namespace detail

/// Reduced Betti numbers over GF(2) in dimensions 0..dim K.
inline std::vector<long> betti_z2(const SimplicialComplex& K, const Guards& guards = {})
{
    if (K.empty())
        return {};
    return detail::reduced_betti(detail::faces_by_size(all_faces(K, guards)));
}

struct LerayWitness {
    Face vertices;
    int dimension = 0;
};

/// nullopt when every induced subcomplex has vanishing reduced homology in
/// all dimensions >= d; otherwise the first witness in (size, lex) order.
inline std::optional<LerayWitness> is_d_leray(const SimplicialComplex& K, int d, const Guards& guards = {})
{
    const std::size_t n = K.num_vertices();
    if (n > guards.leray_max_vertices)
        throw GuardExceeded(std::to_string(n) + " vertices exceed the Leray bound of " +
                            std::to_string(guards.leray_max_vertices));
    if (d < 0)
        d = 0;
    std::vector<Face> faces = all_faces(K, guards);
    std::vector<std::uint32_t> face_mask;
    for (const auto& f : faces) {
        std::uint32_t m = 0;
        for (int v : f)
            m |= 1U << v;
        face_mask.push_back(m);
    }
    // Only faces of dimension >= d-1 enter the ranks needed for m >= d.
    const std::size_t min_size = d >= 1 ? static_cast<std::size_t>(d) : 1;

    std::vector<std::uint32_t> subsets;
    for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w)
        subsets.push_back(w);
    auto as_face = [](std::uint32_t w) {
        Face f;
        for (int v = 0; w; ++v, w >>= 1)
            if (w & 1U)
                f.push_back(v);
        return f;
    };
    std::sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        return as_face(a) < as_face(b);
    });

    for (std::uint32_t w : subsets) {
        if (std::popcount(w) < d + 1)
            continue;
        std::vector<std::vector<Face>> by_size;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if ((face_mask[i] & ~w) != 0 || faces[i].size() < min_size)
                continue;
            if (by_size.size() < faces[i].size())
                by_size.resize(faces[i].size());
            by_size[faces[i].size() - 1].push_back(faces[i]);
        }
        if (static_cast<int>(by_size.size()) <= d)
            continue;
        for (auto& layer : by_size)
            std::sort(layer.begin(), layer.end());
        // Layers below min_size are empty, which only matters for the rank of
        // the boundary out of dimension d; recompute that one fully when d >= 1.
        std::vector<long> betti;
        if (d == 0) {
            betti = detail::reduced_betti(by_size, 0);
        } else {
            const int top = static_cast<int>(by_size.size()) - 1;
            for (int k = d; k <= top; ++k) {
                std::size_t out_rank = detail::boundary_rank(by_size[k], by_size[k - 1]);
                std::size_t in_rank = k + 1 <= top ? detail::boundary_rank(by_size[k + 1], by_size[k]) : 0;
                betti.push_back(static_cast<long>(by_size[k].size()) - static_cast<long>(out_rank) -
                                static_cast<long>(in_rank));
            }
        }
        for (std::size_t i = 0; i < betti.size(); ++i)
            if (betti[i] != 0)
                return LerayWitness{as_face(w), d + static_cast<int>(i)};
    }
    return std::nullopt;
}

} // namespace drep
