#pragma once

// Elementary d-collapses, greedy and exhaustive collapsibility search, and replay.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drep/complex.hpp"

namespace drep {

/// Faces are relative to the vertex indexing of the starting complex.
struct CollapseStep {
    Face free_face;
    Face unique_facet;
};

struct CollapseSequence {
    int d = 1;
    std::vector<CollapseStep> steps;
};

enum class CollapseMode { Greedy, Exhaustive };

struct CollapseResult {
    bool collapsible = false;
    /// false only for a greedy No, which may be wrong.
    bool authoritative = true;
    std::optional<CollapseSequence> sequence;
    std::size_t states = 0;
};

namespace detail {

using FacetList = std::vector<Face>;

/// Removes every face containing `F`, where `J` is the only facet holding it.
inline FacetList collapse_facets(const FacetList& facets, const Face& F, const Face& J)
{
    FacetList next;
    for (const auto& other : facets)
        if (other != J)
            next.push_back(other);
    for (int v : F) {
        Face shrunk = J;
        shrunk.erase(std::find(shrunk.begin(), shrunk.end(), v));
        next.push_back(std::move(shrunk));
    }
    return maximal_sets(std::move(next));
}

/// Free faces of dimension < d with their unique facet, smallest first.
inline std::vector<CollapseStep> free_faces(const FacetList& facets, int d)
{
    std::vector<CollapseStep> out;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const Face& J = facets[j];
        const std::size_t cap = std::min<std::size_t>(J.size(), static_cast<std::size_t>(std::max(d, 0)));
        const std::uint64_t limit = J.size() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << J.size());
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) > cap)
                continue;
            Face F;
            for (std::size_t i = 0; i < J.size(); ++i)
                if (mask >> i & 1U)
                    F.push_back(J[i]);
            bool unique = true;
            for (std::size_t k = 0; k < facets.size() && unique; ++k)
                if (k != j && is_subset(F, facets[k]))
                    unique = false;
            if (unique)
                out.push_back({std::move(F), J});
        }
    }
    std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
        return size_lex_less(a.free_face, b.free_face);
    });
    return out;
}

} // namespace detail

inline SimplicialComplex elementary_collapse(const SimplicialComplex& K, const Face& F, int d)
{
    if (F.empty() || !K.contains(F))
        throw InputError(Errc::NotAFace, "collapse face is not a nonempty face of the complex");
    if (static_cast<int>(F.size()) - 1 >= d)
        throw InputError(Errc::DimTooBig, "face of dimension " + std::to_string(F.size() - 1) +
                                              " cannot be collapsed with d = " + std::to_string(d));
    auto holders = K.facets_containing(F);
    if (holders.size() != 1)
        throw InputError(Errc::NotFree, "face lies in " + std::to_string(holders.size()) + " facets");
    auto next = detail::collapse_facets(K.facets(), F, K.facets()[holders.front()]);
    return SimplicialComplex::from_indexed(K.vertices(), std::move(next));
}

inline bool verify_collapse(const SimplicialComplex& K, const CollapseSequence& seq)
{
    detail::FacetList state = K.facets();
    for (const auto& step : seq.steps) {
        const Face& F = step.free_face;
        if (F.empty() || static_cast<int>(F.size()) > seq.d || !std::is_sorted(F.begin(), F.end()))
            return false;
        int holders = 0;
        bool matches = false;
        for (const auto& J : state)
            if (is_subset(F, J)) {
                ++holders;
                matches = J == step.unique_facet;
            }
        if (holders != 1 || !matches)
            return false;
        state = detail::collapse_facets(state, F, step.unique_facet);
    }
    return state.empty();
}

inline CollapseResult is_d_collapsible(const SimplicialComplex& K, int d, CollapseMode mode, const Guards& guards = {})
{
    if (d < 1)
        throw InputError(Errc::DimTooBig, "d must be at least 1");
    CollapseResult result;
    CollapseSequence seq{d, {}};

    if (mode == CollapseMode::Greedy) {
        detail::FacetList state = K.facets();
        while (!state.empty()) {
            if (++result.states > guards.collapse_max_states)
                throw GuardExceeded("greedy collapse exceeded " + std::to_string(guards.collapse_max_states) + " steps");
            auto moves = detail::free_faces(state, d);
            if (moves.empty()) {
                result.authoritative = false;
                return result;
            }
            seq.steps.push_back(moves.front());
            state = detail::collapse_facets(state, moves.front().free_face, moves.front().unique_facet);
        }
        result.collapsible = true;
        result.sequence = std::move(seq);
        return result;
    }

    std::set<detail::FacetList> failed;
    auto search = [&](auto&& self, const detail::FacetList& state) -> bool {
        if (state.empty())
            return true;
        if (failed.count(state))
            return false;
        if (++result.states > guards.collapse_max_states)
            throw GuardExceeded("collapse search exceeded " + std::to_string(guards.collapse_max_states) + " states");
        for (const auto& move : detail::free_faces(state, d)) {
            seq.steps.push_back(move);
            if (self(self, detail::collapse_facets(state, move.free_face, move.unique_facet)))
                return true;
            seq.steps.pop_back();
        }
        failed.insert(state);
        return false;
    };
    if (search(search, K.facets())) {
        result.collapsible = true;
        result.sequence = std::move(seq);
    }
    return result;
}

} // namespace drep
