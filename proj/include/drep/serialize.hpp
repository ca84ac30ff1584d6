#pragma once

/**
 * JSON encoding of complexes, certificates and reports (schema "drep/1").
 * Everything is label-based, so a certificate can be re-read against the
 * complex it refers to and replayed by the matching verify_* function.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "drep/collapse.hpp"
#include "drep/config_space.hpp"
#include "drep/homology.hpp"
#include "drep/planarity.hpp"
#include "drep/report.hpp"
#include "drep/representability.hpp"

namespace drep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "drep/1";

// --------------------------------------------------------------- primitives

inline Json face_json(const SimplicialComplex& K, const Face& f)
{
    return K.labels(f);
}

inline Face face_from_json(const SimplicialComplex& K, const Json& j)
{
    if (!j.is_array())
        throw InputError(Errc::Parse, "face must be an array of labels");
    std::vector<VertexLabel> labels;
    for (const auto& x : j) {
        if (!x.is_string())
            throw InputError(Errc::Parse, "vertex label must be a string");
        labels.push_back(x.get<std::string>());
    }
    Face f = K.face(labels);
    if (f.size() != labels.size())
        throw InputError(Errc::Parse, "repeated label in a face");
    return f;
}

inline std::vector<int> path_from_json(const SimplicialComplex& K, const Json& j)
{
    if (!j.is_array())
        throw InputError(Errc::Parse, "path must be an array of labels");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw InputError(Errc::Parse, "vertex label must be a string");
        out.push_back(K.index_of(x.get<std::string>()));
    }
    return out;
}

inline Json path_json(const SimplicialComplex& K, const std::vector<int>& p)
{
    Json out = Json::array();
    for (int v : p)
        out.push_back(K.vertices().at(v));
    return out;
}

inline Json rational_json(const Rational& r)
{
    return format_rational(r);
}

inline Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw InputError(Errc::Parse, "rational must be a string 'p/q' or an integer");
}

template <class F>
auto json_guard(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(Errc::Parse, e.what());
    }
}

// ----------------------------------------------------------------- complexes

inline Json complex_json(const SimplicialComplex& K)
{
    Json facets = Json::array();
    for (const auto& f : K.facets())
        facets.push_back(face_json(K, f));
    return Json{{"vertices", K.vertices()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    return json_guard([&] {
        std::vector<std::vector<VertexLabel>> faces;
        for (const auto& f : j.at("facets"))
            faces.push_back(f.get<std::vector<VertexLabel>>());
        if (faces.empty())
            return SimplicialComplex{};
        return build_complex(faces);
    });
}

// -------------------------------------------------------------- realizations

inline Json realization_json(const LinearRealization& R)
{
    Json pts = Json::array();
    for (const auto& [labels, p] : R.points) {
        Json coords = Json::array();
        for (const auto& c : p)
            coords.push_back(rational_json(c));
        pts.push_back(Json{{"facet", labels}, {"point", coords}});
    }
    return Json{{"d", R.d}, {"points", pts}};
}

inline LinearRealization realization_from_json(const Json& j)
{
    return json_guard([&] {
        LinearRealization R;
        R.d = j.at("d").get<int>();
        for (const auto& p : j.at("points")) {
            QPoint q;
            for (const auto& c : p.at("point"))
                q.push_back(rational_from_json(c));
            R.points.emplace_back(p.at("facet").get<std::vector<VertexLabel>>(), std::move(q));
        }
        return R;
    });
}

inline Json intervals_json(const SimplicialComplex& K, const IntervalRepresentation& iv)
{
    Json out = Json::array();
    for (std::size_t v = 0; v < iv.intervals.size(); ++v)
        out.push_back(Json{{"vertex", K.vertices()[v]},
                           {"interval", {rational_json(iv.intervals[v].first), rational_json(iv.intervals[v].second)}}});
    return out;
}

inline IntervalRepresentation intervals_from_json(const SimplicialComplex& K, const Json& j)
{
    return json_guard([&] {
        IntervalRepresentation iv;
        iv.intervals.assign(K.num_vertices(), {Rational(1), Rational(0)});
        std::vector<bool> seen(K.num_vertices(), false);
        for (const auto& e : j) {
            int v = K.index_of(e.at("vertex").get<std::string>());
            if (seen[v])
                throw InputError(Errc::Parse, "vertex given two intervals");
            seen[v] = true;
            iv.intervals[v] = {rational_from_json(e.at("interval").at(0)), rational_from_json(e.at("interval").at(1))};
        }
        return iv;
    });
}

inline Json drawing_json(const SimplicialComplex& base, const PlanarDrawing& D)
{
    Json out = Json::array();
    for (std::size_t v = 0; v < D.position.size(); ++v)
        out.push_back(Json{{"vertex", base.vertices()[v]}, {"x", D.position[v].x}, {"y", D.position[v].y}});
    return out;
}

inline PlanarDrawing drawing_from_json(const SimplicialComplex& base, const Json& j)
{
    return json_guard([&] {
        PlanarDrawing D;
        D.position.resize(base.num_vertices());
        std::vector<bool> seen(base.num_vertices(), false);
        for (const auto& e : j) {
            int v = base.index_of(e.at("vertex").get<std::string>());
            if (seen[v])
                throw InputError(Errc::Parse, "vertex drawn twice");
            seen[v] = true;
            D.position[v] = {e.at("x").get<long long>(), e.at("y").get<long long>()};
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw InputError(Errc::Parse, "drawing misses a vertex");
        return D;
    });
}

// ------------------------------------------------------------- certificates

inline Json collapse_json(const SimplicialComplex& K, const CollapseSequence& s)
{
    Json steps = Json::array();
    for (const auto& st : s.steps)
        steps.push_back(Json{{"free_face", face_json(K, st.free_face)}, {"facet", face_json(K, st.unique_facet)}});
    return Json{{"d", s.d}, {"steps", steps}};
}

inline CollapseSequence collapse_from_json(const SimplicialComplex& K, const Json& j)
{
    return json_guard([&] {
        CollapseSequence s;
        s.d = j.at("d").get<int>();
        for (const auto& st : j.at("steps"))
            s.steps.push_back({face_from_json(K, st.at("free_face")), face_from_json(K, st.at("facet"))});
        return s;
    });
}

inline Json obstruction_json(const SimplicialComplex& K, const Obstruction1& o)
{
    Json j{{"kind", obstruction_name(o.kind)}, {"vertices", path_json(K, o.vertices)}};
    if (o.kind == ObstructionKind::AsteroidalTriple) {
        Json paths = Json::array();
        for (const auto& p : o.paths)
            paths.push_back(path_json(K, p));
        j["paths"] = paths;
    }
    return j;
}

inline Obstruction1 obstruction_from_json(const SimplicialComplex& K, const Json& j)
{
    return json_guard([&] {
        Obstruction1 o;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "NonClique")
            o.kind = ObstructionKind::NonClique;
        else if (kind == "InducedCycle")
            o.kind = ObstructionKind::InducedCycle;
        else if (kind == "AsteroidalTriple")
            o.kind = ObstructionKind::AsteroidalTriple;
        else
            throw InputError(Errc::Parse, "unknown obstruction kind '" + kind + "'");
        o.vertices = path_from_json(K, j.at("vertices"));
        if (o.kind == ObstructionKind::AsteroidalTriple)
            for (std::size_t i = 0; i < 3; ++i)
                o.paths[i] = path_from_json(K, j.at("paths").at(i));
        return o;
    });
}

inline Json asteroidal_json(const SimplicialComplex& K, const AsteroidalMap1& m)
{
    static const char* names[3] = {"12", "13", "23"};
    Json F = Json::array();
    for (const auto& f : m.F)
        F.push_back(face_json(K, f));
    Json paths = Json::object();
    for (std::size_t p = 0; p < 3; ++p) {
        Json seq = Json::array();
        for (const auto& f : m.pi[p])
            seq.push_back(face_json(K, f));
        paths[names[p]] = seq;
    }
    return Json{{"F", F}, {"paths", paths}};
}

inline AsteroidalMap1 asteroidal_from_json(const SimplicialComplex& K, const Json& j)
{
    return json_guard([&] {
        static const char* names[3] = {"12", "13", "23"};
        AsteroidalMap1 m;
        for (std::size_t i = 0; i < 3; ++i)
            m.F[i] = face_from_json(K, j.at("F").at(i));
        for (std::size_t p = 0; p < 3; ++p)
            for (const auto& f : j.at("paths").at(names[p]))
                m.pi[p].push_back(face_from_json(K, f));
        return m;
    });
}

inline Json cell_json(const SimplicialComplex& base, const ProdCell& c)
{
    return Json{{"first", face_json(base, c.first)}, {"second", face_json(base, c.second)}};
}

inline ProdCell cell_from_json(const SimplicialComplex& base, const Json& j)
{
    return json_guard([&] { return ProdCell{face_from_json(base, j.at("first")), face_from_json(base, j.at("second"))}; });
}

inline Json cycle_json(const SimplicialComplex& base, const SymmetricCycle& c)
{
    Json nodes = Json::array();
    for (const auto& n : c.nodes)
        nodes.push_back(cell_json(base, n));
    return Json{{"half", c.half}, {"nodes", nodes}};
}

inline SymmetricCycle cycle_from_json(const SimplicialComplex& base, const Json& j)
{
    return json_guard([&] {
        SymmetricCycle c;
        c.half = j.at("half").get<std::size_t>();
        for (const auto& n : j.at("nodes"))
            c.nodes.push_back(cell_from_json(base, n));
        return c;
    });
}

inline Json kuratowski_json(const SimplicialComplex& base, const KuratowskiSubgraph& k)
{
    Json paths = Json::array();
    for (const auto& p : k.paths)
        paths.push_back(path_json(base, p));
    return Json{{"kind", kuratowski_name(k.kind)}, {"branch", path_json(base, k.branch)}, {"paths", paths}};
}

inline KuratowskiSubgraph kuratowski_from_json(const SimplicialComplex& base, const Json& j)
{
    return json_guard([&] {
        KuratowskiSubgraph k;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "K5")
            k.kind = KuratowskiKind::K5;
        else if (kind == "K3,3")
            k.kind = KuratowskiKind::K33;
        else
            throw InputError(Errc::Parse, "unknown Kuratowski kind '" + kind + "'");
        k.branch = path_from_json(base, j.at("branch"));
        for (const auto& p : j.at("paths"))
            k.paths.push_back(path_from_json(base, p));
        return k;
    });
}

inline Json leray_json(const SimplicialComplex& K, const LerayWitness& w)
{
    return Json{{"vertices", face_json(K, w.vertices)}, {"dimension", w.dimension}};
}

inline Json z2_json(const Z2Complex& Z)
{
    Json cells = Json::array();
    for (const auto& c : Z.maximal_cells)
        cells.push_back(cell_json(Z.base, c));
    return Json{{"kind", Z.kind == Z2Kind::ConfigSpace ? "config-space" : "deleted-product"},
                {"base", complex_json(Z.base)},
                {"maximal_cells", cells}};
}

// --------------------------------------------------------------- aggregates

inline Json decide1_json(const SimplicialComplex& K, const Decide1Result& r)
{
    Json j{{"verdict", r.representable ? "1_REPRESENTABLE" : "NOT_1_REPRESENTABLE"}};
    if (r.obstruction)
        j["obstruction"] = obstruction_json(K, *r.obstruction);
    if (r.intervals) {
        Json order = Json::array();
        for (int f : r.arrangement)
            order.push_back(face_json(K, K.facets()[f]));
        j["arrangement"] = order;
        j["intervals"] = intervals_json(K, *r.intervals);
    }
    if (r.certificate_pending)
        j["certificate_pending"] = true;
    return j;
}

inline Json decide2_json(const SimplicialComplex& K, const Decide2Result& r)
{
    (void)K;
    Json j;
    switch (r.status) {
    case Decide2Status::NotApplicable: j["verdict"] = "NOT_APPLICABLE"; break;
    case Decide2Status::Yes: j["verdict"] = "2_REPRESENTABLE"; break;
    case Decide2Status::No: j["verdict"] = "NOT_2_REPRESENTABLE"; break;
    }
    j["dual"] = complex_json(r.dual.complex);
    if (r.drawing)
        j["drawing"] = drawing_json(r.dual.complex, *r.drawing);
    if (r.realization)
        j["realization"] = realization_json(*r.realization);
    if (r.kuratowski)
        j["kuratowski"] = kuratowski_json(r.dual.complex, *r.kuratowski);
    return j;
}

inline Json matousek_json(const SimplicialComplex& base, const MatousekStatus& m)
{
    Json j{{"d", m.d}, {"value", verdict_name(m.value)}, {"basis", m.basis}};
    if (m.cycle)
        j["symmetric_cycle"] = cycle_json(base, *m.cycle);
    if (m.kuratowski)
        j["kuratowski"] = kuratowski_json(base, *m.kuratowski);
    if (m.realization)
        j["realization"] = realization_json(*m.realization);
    return j;
}

inline Json report_json(const SimplicialComplex& K, const Report& rep)
{
    const SimplicialComplex base = dual(K).complex;
    Json j{{"schema", kSchema},
           {"dual_dimension", rep.dual_dimension},
           {"upper_bound", rep.upper_bound},
           {"upper_realization", realization_json(rep.upper_realization)}};
    if (rep.d1)
        j["decide1"] = decide1_json(K, *rep.d1);
    if (rep.asteroidal_map)
        j["asteroidal_map"] = asteroidal_json(K, *rep.asteroidal_map);
    if (rep.lifted_cycle)
        j["lifted_cycle"] = cycle_json(base, *rep.lifted_cycle);
    if (rep.d2)
        j["decide2_cograph"] = decide2_json(K, *rep.d2);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json x{{"d", e.d},
               {"representable", verdict_name(e.representable)},
               {"basis", e.basis},
               {"matousek", matousek_json(base, e.matousek)},
               {"collapsible", verdict_name(e.collapsible)},
               {"leray", verdict_name(e.leray)}};
        if (e.realization)
            x["realization"] = realization_json(*e.realization);
        if (e.collapse)
            x["collapse"] = collapse_json(K, *e.collapse);
        if (e.leray_witness)
            x["leray_witness"] = leray_json(K, *e.leray_witness);
        entries.push_back(std::move(x));
    }
    j["entries"] = entries;
    return j;
}

} // namespace drep
