#pragma once

// Fixture loading and seeded random complexes for the test suite.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "drep/complex.hpp"
#include "drep/io.hpp"

#ifndef DREP_FIXTURE_DIR
#error "DREP_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name)
{
    return std::string(DREP_FIXTURE_DIR) + "/" + name + ".txt";
}

inline drep::SimplicialComplex fixture(const std::string& name)
{
    return drep::load_complex(fixture_path(name));
}

inline const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names{"fig1",   "fig2",  "spider", "mobius",         "path4",
                                                "vkf1",   "k33_classified",  "km", "triangle_boundary"};
    return names;
}

inline drep::SimplicialComplex complex_of(const std::vector<std::vector<std::string>>& facets)
{
    return drep::build_complex(facets);
}

/// Complex from vertex bitmasks over labels "1".."n".
inline drep::SimplicialComplex from_masks(const std::vector<std::uint32_t>& masks)
{
    std::vector<std::vector<std::string>> raw;
    for (auto m : masks) {
        std::vector<std::string> f;
        for (int i = 0; i < 32; ++i)
            if (m >> i & 1U)
                f.push_back(std::to_string(i + 1));
        raw.push_back(std::move(f));
    }
    return drep::build_complex(raw);
}

/// Every complex whose vertex set is contained in {1..n}: all nonempty
/// antichains of nonempty subsets.
inline std::vector<drep::SimplicialComplex> all_complexes(int n)
{
    const std::uint32_t full = 1U << n;
    std::vector<drep::SimplicialComplex> out;
    std::vector<std::uint32_t> chosen;
    // subsets in increasing order; a set may join if incomparable with all chosen
    auto go = [&](auto&& self, std::uint32_t next) -> void {
        if (!chosen.empty())
            out.push_back(from_masks(chosen));
        for (std::uint32_t s = next; s < full; ++s) {
            bool ok = true;
            for (auto c : chosen)
                if ((c & s) == c || (c & s) == s) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(s);
            self(self, s + 1);
            chosen.pop_back();
        }
    };
    go(go, 1);
    return out;
}

/// Random complex on vertices 1..n: a handful of random nonempty subsets,
/// reduced to their maximal members.
inline drep::SimplicialComplex random_complex(std::mt19937_64& rng, int n, int max_sets = 6, int max_size = 4)
{
    std::uniform_int_distribution<int> count(1, max_sets);
    std::uniform_int_distribution<int> size(1, std::min(max_size, n));
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i)
        verts[i] = i;
    std::vector<std::uint32_t> masks;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        std::shuffle(verts.begin(), verts.end(), rng);
        std::uint32_t m = 0;
        const int s = size(rng);
        for (int i = 0; i < s; ++i)
            m |= 1U << verts[i];
        masks.push_back(m);
    }
    return from_masks(masks);
}

/// Random complex in which every vertex lies in at most two facets and some
/// vertex lies in two, so its dual is a graph with at least one edge.
inline drep::SimplicialComplex random_cograph_complex(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> facets(2, 6);
    std::uniform_int_distribution<int> verts(3, 9);
    for (;;) {
        const int m = facets(rng), n = verts(rng);
        std::uniform_int_distribution<int> pick(0, m - 1);
        std::bernoulli_distribution two(0.5);
        std::vector<std::vector<std::string>> raw(m);
        for (int v = 0; v < n; ++v) {
            int a = pick(rng);
            raw[a].push_back("v" + std::to_string(v));
            if (two(rng)) {
                int b = pick(rng);
                if (b != a)
                    raw[b].push_back("v" + std::to_string(v));
            }
        }
        raw.erase(std::remove_if(raw.begin(), raw.end(), [](const auto& f) { return f.empty(); }), raw.end());
        if (raw.empty())
            continue;
        auto K = drep::build_complex(raw);
        // every vertex in at most two facets, some vertex in exactly two
        bool shared = false, ok = true;
        for (std::size_t v = 0; v < K.num_vertices(); ++v) {
            auto c = K.facets_containing(drep::Face{static_cast<int>(v)}).size();
            shared |= c == 2;
            ok &= c <= 2;
        }
        if (ok && shared)
            return K;
    }
}

} // namespace testsupport
