#pragma once

// Matoušek status and the per-dimension report.

#include <optional>
#include <string>
#include <vector>

#include "drep/collapse.hpp"
#include "drep/config_space.hpp"
#include "drep/geometry.hpp"
#include "drep/homology.hpp"
#include "drep/representability.hpp"

namespace drep {

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

struct MatousekStatus {
    int d = 1;
    Verdict value = Verdict::Unknown;
    std::string basis;
    std::optional<SymmetricCycle> cycle;
    std::optional<KuratowskiSubgraph> kuratowski; // dual vertex indices
    std::optional<LinearRealization> realization;
};

namespace detail {

/// A verified faithful realization of K in dimension d, if one of the
/// constructions applies: moment curve, interval order, or planar drawing.
inline std::optional<std::pair<LinearRealization, std::string>> known_realization(const SimplicialComplex& K, int d,
                                                                                   const Guards& guards)
{
    const int bound = moment_curve_bound(K);
    if (d >= std::max(bound, 1)) {
        auto R = moment_curve_realization(K, d);
        if (!verify_realization(K, R, guards))
            throw VerificationFailed("moment-curve realization is not faithful");
        return std::pair{R, std::string("moment-curve")};
    }
    try {
        auto d1 = decide_1_representable(K, guards);
        if (d1.representable && !d1.certificate_pending)
            return std::pair{pad_realization(arrangement_realization(K, d1.arrangement), d),
                             std::string(d == 1 ? "interval-arrangement" : "padded-interval-arrangement")};
    } catch (const GuardExceeded&) {
    }
    if (d >= 2) {
        auto d2 = decide_2_representable_cograph(K, guards);
        if (d2.status == Decide2Status::Yes)
            return std::pair{pad_realization(*d2.realization, d),
                             std::string(d == 2 ? "planar-drawing" : "padded-planar-drawing")};
    }
    return std::nullopt;
}

} // namespace detail

inline MatousekStatus matousek_status(const SimplicialComplex& K, int d, const Guards& guards = {})
{
    if (d < 1)
        throw InputError(Errc::DimTooBig, "d must be at least 1");
    MatousekStatus st;
    st.d = d;
    Z2Complex Z = config_space(K, guards);
    if (Z.maximal_cells.empty()) {
        st.value = Verdict::Yes;
        st.basis = "empty-configuration-space";
        return st;
    }
    if (d == 1) {
        if (s0_colorable(Z, guards).colorable) {
            st.value = Verdict::Yes;
            st.basis = "s0-coloring";
        } else {
            st.value = Verdict::No;
            st.basis = "symmetric-cycle";
            st.cycle = find_symmetric_cycle(Z, guards);
        }
        return st;
    }
    if (d == 2 && dual(K).complex.dimension() == 1) {
        auto d2 = decide_2_representable_cograph(K, guards);
        if (d2.status == Decide2Status::Yes) {
            st.value = Verdict::Yes;
            st.basis = "planar-drawing";
            st.realization = d2.realization;
        } else {
            st.value = Verdict::No;
            st.basis = "kuratowski";
            st.kuratowski = d2.kuratowski;
        }
        return st;
    }
    if (auto r = detail::known_realization(K, d, guards)) {
        st.value = Verdict::Yes;
        st.basis = r->second;
        st.realization = std::move(r->first);
    }
    return st;
}

struct ReportEntry {
    int d = 1;
    Verdict representable = Verdict::Unknown;
    std::string basis;
    std::optional<LinearRealization> realization;
    MatousekStatus matousek;
    Verdict collapsible = Verdict::Unknown;
    std::optional<CollapseSequence> collapse;
    Verdict leray = Verdict::Unknown;
    std::optional<LerayWitness> leray_witness;
};

struct Report {
    int dual_dimension = -1;
    int upper_bound = 1;
    LinearRealization upper_realization;
    std::optional<Decide1Result> d1;
    std::optional<AsteroidalMap1> asteroidal_map;
    std::optional<SymmetricCycle> lifted_cycle;
    std::optional<Decide2Result> d2;
    std::vector<ReportEntry> entries;
};

inline Report report(const SimplicialComplex& K, int d_max, const Guards& guards = {})
{
    if (d_max < 1)
        throw InputError(Errc::DimTooBig, "d_max must be at least 1");
    Report rep;
    rep.dual_dimension = dual(K).complex.dimension();
    rep.upper_bound = std::max(2 * rep.dual_dimension + 1, 1);
    rep.upper_realization = moment_curve_realization(K, rep.upper_bound);
    if (!verify_realization(K, rep.upper_realization, guards))
        throw VerificationFailed("moment-curve realization is not faithful");

    try {
        rep.d1 = decide_1_representable(K, guards);
        if (!rep.d1->representable) {
            rep.asteroidal_map = build_asteroidal_map(K, *rep.d1->obstruction);
            rep.lifted_cycle = lift_asteroidal(K, *rep.asteroidal_map);
        }
    } catch (const GuardExceeded&) {
        rep.d1.reset();
    }
    try {
        rep.d2 = decide_2_representable_cograph(K, guards);
    } catch (const GuardExceeded&) {
        rep.d2.reset();
    }

    for (int d = 1; d <= d_max; ++d) {
        ReportEntry e;
        e.d = d;
        try {
            e.matousek = matousek_status(K, d, guards);
        } catch (const GuardExceeded&) {
            e.matousek = MatousekStatus{d, Verdict::Unknown, "guard", {}, {}, {}};
        }
        try {
            auto c = is_d_collapsible(K, d, CollapseMode::Exhaustive, guards);
            e.collapsible = c.collapsible ? Verdict::Yes : Verdict::No;
            e.collapse = c.sequence;
        } catch (const GuardExceeded&) {
        }
        try {
            auto w = is_d_leray(K, d, guards);
            e.leray = w ? Verdict::No : Verdict::Yes;
            e.leray_witness = w;
        } catch (const GuardExceeded&) {
        }

        // positive side
        if (d == 1 && rep.d1 && rep.d1->representable) {
            e.representable = Verdict::Yes;
            e.basis = rep.d1->certificate_pending ? "lekkerkerker-boland (certificate pending)" : "interval-arrangement";
            if (!rep.d1->certificate_pending)
                e.realization = arrangement_realization(K, rep.d1->arrangement);
        } else if (d == 2 && rep.d2 && rep.d2->status == Decide2Status::Yes) {
            e.representable = Verdict::Yes;
            e.basis = "planar-drawing";
            e.realization = rep.d2->realization;
        } else if (d >= rep.upper_bound) {
            e.representable = Verdict::Yes;
            e.basis = "moment-curve";
            e.realization = moment_curve_realization(K, d);
        } else {
            for (auto it = rep.entries.rbegin(); it != rep.entries.rend(); ++it)
                if (it->representable == Verdict::Yes) {
                    e.representable = Verdict::Yes;
                    e.basis = "padded from d=" + std::to_string(it->d);
                    if (it->realization)
                        e.realization = pad_realization(*it->realization, d);
                    break;
                }
        }
        if (e.realization && !verify_realization(K, *e.realization, guards))
            throw VerificationFailed("report realization failed verification at d=" + std::to_string(d));

        // negative side
        std::string no;
        if (d == 1 && rep.d1 && !rep.d1->representable)
            no = std::string("lekkerkerker-boland: ") + obstruction_name(rep.d1->obstruction->kind);
        else if (d == 2 && rep.d2 && rep.d2->status == Decide2Status::No)
            no = "kuratowski";
        else if (e.matousek.value == Verdict::No)
            no = "not " + std::to_string(d) + "-Matousek";
        else if (e.collapsible == Verdict::No)
            no = "not " + std::to_string(d) + "-collapsible";
        else if (e.leray == Verdict::No)
            no = "not " + std::to_string(d) + "-Leray";
        if (!no.empty()) {
            if (e.representable == Verdict::Yes)
                throw VerificationFailed("contradictory verdicts at d=" + std::to_string(d));
            e.representable = Verdict::No;
            e.basis = no;
            for (auto& prev : rep.entries)
                if (prev.representable == Verdict::Unknown) {
                    prev.representable = Verdict::No;
                    prev.basis = "not representable at d=" + std::to_string(d);
                } else if (prev.representable == Verdict::Yes) {
                    throw VerificationFailed("representable at a lower dimension but not at d=" + std::to_string(d));
                }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace drep
