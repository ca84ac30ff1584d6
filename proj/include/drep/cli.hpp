#pragma once

// Command-line front end. `run` is the whole program minus argv handling, so
// tests can drive it with string streams.

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drep/io.hpp"
#include "drep/report.hpp"
#include "drep/serialize.hpp"
#include "drep/svg.hpp"

namespace drep {

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitGuard = 3, kExitVerification = 4 };

namespace detail {

struct CliContext {
    std::string format = "text";
    long long guard = 0;
    unsigned long long seed = 0;
    std::ostream* out = nullptr;

    bool json() const { return format == "json"; }

    Guards guards() const
    {
        Guards g;
        if (guard > 0) {
            g.max_faces = static_cast<std::size_t>(guard);
            g.max_cells = static_cast<std::size_t>(guard);
            g.collapse_max_states = static_cast<std::size_t>(guard);
        }
        return g;
    }

    void emit(const std::string& command, Json body) const
    {
        Json j{{"schema", kSchema}, {"command", command}};
        for (auto& [k, v] : body.items())
            j[k] = v;
        *out << j.dump(2) << '\n';
    }
};

inline std::string joined(const std::vector<VertexLabel>& labels, const std::string& sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i)
        s += (i ? sep : "") + labels[i];
    return s;
}

inline std::string cell_text(const SimplicialComplex& base, const ProdCell& c)
{
    return "(" + joined(base.labels(c.first), ",") + " | " + joined(base.labels(c.second), ",") + ")";
}

inline std::string path_text(const SimplicialComplex& K, const std::vector<int>& p)
{
    std::vector<VertexLabel> l;
    for (int v : p)
        l.push_back(K.vertices()[v]);
    return joined(l, " ");
}

inline std::string obstruction_text(const SimplicialComplex& K, const Obstruction1& o)
{
    std::vector<VertexLabel> l;
    for (int v : o.vertices)
        l.push_back(K.vertices()[v]);
    std::string tag = o.kind == ObstructionKind::NonClique      ? "NONCLIQUE"
                      : o.kind == ObstructionKind::InducedCycle ? "CYCLE"
                                                                : "AT";
    std::string s = "certificate: " + tag + "(" + joined(l, ",") + ")\n";
    if (o.kind == ObstructionKind::AsteroidalTriple) {
        static const char* names[3] = {"path 12", "path 13", "path 23"};
        for (std::size_t i = 0; i < 3; ++i)
            s += std::string(names[i]) + ": " + path_text(K, o.paths[i]) + "\n";
    }
    return s;
}

inline std::string drawing_text(const SimplicialComplex& base, const PlanarDrawing& D)
{
    std::string s;
    for (std::size_t v = 0; v < D.position.size(); ++v)
        s += base.vertices()[v] + " : " + std::to_string(D.position[v].x) + " " + std::to_string(D.position[v].y) + "\n";
    return s;
}

inline std::string kuratowski_text(const SimplicialComplex& base, const KuratowskiSubgraph& k)
{
    std::string s = "certificate: " + std::string(kuratowski_name(k.kind)) + " branch " + path_text(base, k.branch) + "\n";
    for (const auto& p : k.paths)
        s += "path: " + path_text(base, p) + "\n";
    return s;
}

inline std::string cycle_text(const SimplicialComplex& base, const SymmetricCycle& c)
{
    std::string s = "half-length " + std::to_string(c.half) + "\n";
    for (const auto& n : c.nodes)
        s += cell_text(base, n) + "\n";
    return s;
}

inline std::string intervals_text(const SimplicialComplex& K, const IntervalRepresentation& iv)
{
    std::string s;
    for (std::size_t v = 0; v < iv.intervals.size(); ++v)
        s += K.vertices()[v] + " : [" + format_rational(iv.intervals[v].first) + ", " +
             format_rational(iv.intervals[v].second) + "]\n";
    return s;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    detail::CliContext ctx;
    ctx.out = &out;

    CLI::App app{"Nerve complexes: duals, collapsibility, representability and configuration spaces", "drep"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--guard", ctx.guard, "budget for faces, cells and collapse states")->check(CLI::PositiveNumber);
    app.add_option("--seed", ctx.seed, "layout seed for render");

    std::string file, realization_file, svg_file, mode = "exhaustive", object = "auto";
    int k = 0, d = 0, dmax = 3;
    bool moment = false, deleted = false;

    std::function<void()> action;
    auto sub = [&](const char* name, const char* help, bool needs_file = true) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        if (needs_file)
            s->add_option("file", file, "complex file")->required();
        return s;
    };
    auto load = [&] { return load_complex(file); };

    sub("facets", "canonical facet list")->callback([&] {
        action = [&] {
            auto K = load();
            if (ctx.json())
                ctx.emit("facets", {{"complex", complex_json(K)}});
            else
                out << format_complex(K);
        };
    });
    sub("dual", "dual complex K'")->callback([&] {
        action = [&] {
            auto D = dual(load()).complex;
            if (ctx.json())
                ctx.emit("dual", {{"complex", complex_json(D)}});
            else
                out << format_complex(D);
        };
    });
    sub("sd", "barycentric subdivision")->callback([&] {
        action = [&] {
            auto S = barycentric_subdivision(load(), ctx.guards());
            if (ctx.json())
                ctx.emit("sd", {{"complex", complex_json(S)}});
            else
                out << format_complex(S);
        };
    });
    {
        auto* s = sub("skeleton", "k-skeleton");
        s->add_option("--k", k, "skeleton dimension")->required()->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                auto S = skeleton(load(), k);
                if (ctx.json())
                    ctx.emit("skeleton", {{"k", k}, {"complex", complex_json(S)}});
                else
                    out << format_complex(S);
            };
        });
    }
    sub("nonfaces", "minimal non-faces")->callback([&] {
        action = [&] {
            auto K = load();
            auto N = minimal_nonfaces(K, ctx.guards());
            if (ctx.json()) {
                Json a = Json::array();
                for (const auto& f : N)
                    a.push_back(face_json(K, f));
                ctx.emit("nonfaces", {{"nonfaces", a}});
            } else {
                for (const auto& f : N)
                    out << detail::joined(K.labels(f)) << '\n';
            }
        };
    });
    {
        auto* s = sub("leray", "d-Leray test over induced subcomplexes");
        s->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto w = is_d_leray(K, d, ctx.guards());
                if (ctx.json()) {
                    Json j{{"d", d}, {"verdict", w ? "NOT_LERAY" : "LERAY"}};
                    if (w)
                        j["witness"] = leray_json(K, *w);
                    ctx.emit("leray", j);
                } else if (w) {
                    out << "NOT_" << d << "_LERAY\nwitness: " << detail::joined(K.labels(w->vertices))
                        << " has homology in dimension " << w->dimension << '\n';
                } else {
                    out << d << "_LERAY\n";
                }
            };
        });
    }
    {
        auto* s = sub("collapse", "d-collapsibility search");
        s->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--mode", mode)->check(CLI::IsMember({"greedy", "exhaustive"}));
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto r = is_d_collapsible(K, d, mode == "greedy" ? CollapseMode::Greedy : CollapseMode::Exhaustive,
                                          ctx.guards());
                if (r.sequence && !verify_collapse(K, *r.sequence))
                    throw VerificationFailed("collapse sequence failed its replay");
                std::string verdict = r.collapsible       ? "COLLAPSIBLE"
                                      : r.authoritative ? "NOT_COLLAPSIBLE"
                                                        : "INCONCLUSIVE";
                if (ctx.json()) {
                    Json j{{"d", d}, {"mode", mode}, {"verdict", verdict}, {"states", r.states}};
                    if (r.sequence)
                        j["sequence"] = collapse_json(K, *r.sequence);
                    ctx.emit("collapse", j);
                } else {
                    out << verdict << " d=" << d << " (" << mode << ")\n";
                    if (r.sequence)
                        for (const auto& st : r.sequence->steps)
                            out << detail::joined(K.labels(st.free_face)) << " < "
                                << detail::joined(K.labels(st.unique_facet)) << '\n';
                }
            };
        });
    }
    sub("decide1", "1-representability")->callback([&] {
        action = [&] {
            auto K = load();
            auto r = decide_1_representable(K, ctx.guards());
            if (r.obstruction && !verify_obstruction(K, *r.obstruction))
                throw VerificationFailed("obstruction failed its replay");
            if (ctx.json()) {
                ctx.emit("decide1", decide1_json(K, r));
                return;
            }
            if (!r.representable) {
                out << "NOT_1_REPRESENTABLE\n" << detail::obstruction_text(K, *r.obstruction);
                return;
            }
            out << "1_REPRESENTABLE\n";
            if (r.intervals)
                out << detail::intervals_text(K, *r.intervals) << "# VERIFIED\n";
            else
                out << "# certificate pending: arrangement search exceeded its guard\n";
        };
    });
    sub("decide2-cograph", "2-representability when dim K' = 1")->callback([&] {
        action = [&] {
            auto K = load();
            auto r = decide_2_representable_cograph(K, ctx.guards());
            if (ctx.json()) {
                ctx.emit("decide2-cograph", decide2_json(K, r));
                return;
            }
            const auto& base = r.dual.complex;
            switch (r.status) {
            case Decide2Status::NotApplicable:
                out << "NOT_APPLICABLE dim K' = " << base.dimension() << '\n';
                break;
            case Decide2Status::Yes:
                out << "2_REPRESENTABLE\n" << detail::drawing_text(base, *r.drawing) << format_realization(*r.realization)
                    << "# VERIFIED\n";
                break;
            case Decide2Status::No:
                out << "NOT_2_REPRESENTABLE\n" << detail::kuratowski_text(base, *r.kuratowski);
                break;
            }
        };
    });
    {
        auto* s = sub("represent", "d-dimensional realization");
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_flag("--moment-curve", moment, "use the moment curve");
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto G = ctx.guards();
                std::optional<LinearRealization> R;
                std::string basis;
                Verdict verdict = Verdict::Unknown;
                if (moment) {
                    R = moment_curve_realization(K, d);
                    basis = "moment-curve";
                    if (!is_faithful(K, *R, G) && realization_nerve(K, *R) == K)
                        verdict = Verdict::Yes;
                    else if (d >= moment_curve_bound(K))
                        throw VerificationFailed("moment-curve realization is not faithful");
                } else {
                    auto rep = report(K, d, G);
                    const auto& e = rep.entries.back();
                    verdict = e.representable;
                    basis = e.basis;
                    R = e.realization;
                }
                bool verified = verdict == Verdict::Yes && R && verify_realization(K, *R, G);
                if (verdict == Verdict::Yes && !verified)
                    throw VerificationFailed("realization failed its replay");
                if (ctx.json()) {
                    Json j{{"d", d}, {"verdict", verdict_name(verdict)}, {"basis", basis}};
                    if (R)
                        j["realization"] = realization_json(*R);
                    j["verified"] = verified;
                    ctx.emit("represent", j);
                    return;
                }
                if (verified) {
                    out << format_realization(*R) << "# VERIFIED " << basis << '\n';
                } else if (verdict == Verdict::No) {
                    out << "# NOT_" << d << "_REPRESENTABLE " << basis << '\n';
                } else if (moment) {
                    out << format_realization(*R) << "# NOT_FAITHFUL below the moment-curve bound "
                        << moment_curve_bound(K) << '\n';
                } else {
                    out << "# UNKNOWN\n";
                }
            };
        });
    }
    {
        auto* s = sub("verify-faithful", "check a realization file");
        s->add_option("--realization", realization_file)->required();
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto R = parse_realization(read_file(realization_file));
                auto G = ctx.guards();
                auto bad = is_faithful(K, R, G);
                bool nerve = realization_nerve(K, R) == K;
                std::string verdict = bad ? "NOT_FAITHFUL" : nerve ? "VERIFIED" : "FAITHFUL_NERVE_DIFFERS";
                if (ctx.json()) {
                    Json j{{"verdict", verdict}, {"faithful", !bad}, {"nerve_equal", nerve}};
                    if (bad)
                        j["violation"] = face_json(K, *bad);
                    ctx.emit("verify-faithful", j);
                } else {
                    out << verdict << '\n';
                    if (bad)
                        out << "violation: " << detail::joined(K.labels(*bad)) << " is not a face but its sets meet\n";
                }
            };
        });
    }
    {
        auto* s = sub("config-space", "maximal cells of the configuration space");
        s->add_flag("--deleted-product", deleted, "deleted product of the input complex instead");
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto G = ctx.guards();
                Z2Complex Z = deleted ? deleted_product(K, G) : config_space(K, G);
                std::size_t total = all_cells(Z, G).size();
                if (ctx.json()) {
                    Json j = z2_json(Z);
                    j["num_cells"] = total;
                    ctx.emit("config-space", j);
                    return;
                }
                out << (deleted ? "deleted product" : "configuration space") << ": " << Z.maximal_cells.size()
                    << " maximal cells, " << total << " cells\n";
                for (const auto& c : Z.maximal_cells)
                    out << detail::cell_text(Z.base, c) << '\n';
            };
        });
    }
    sub("s0", "equivariant map to S^0")->callback([&] {
        action = [&] {
            auto Z = config_space(load(), ctx.guards());
            auto r = s0_colorable(Z, ctx.guards());
            if (r.colorable && !verify_coloring(r))
                throw VerificationFailed("coloring failed its replay");
            int comps = r.component.empty() ? 0 : *std::max_element(r.component.begin(), r.component.end()) + 1;
            if (ctx.json()) {
                Json j{{"verdict", r.colorable ? "COLORABLE" : "NOT_COLORABLE"},
                       {"nodes", r.graph.nodes.size()},
                       {"components", comps}};
                if (r.colorable) {
                    Json signs = Json::array();
                    for (std::size_t i = 0; i < r.graph.nodes.size(); ++i) {
                        Json c = cell_json(Z.base, r.graph.nodes[i]);
                        c["sign"] = r.sign[r.component[i]];
                        signs.push_back(c);
                    }
                    j["coloring"] = signs;
                }
                ctx.emit("s0", j);
            } else {
                out << (r.colorable ? "COLORABLE" : "NOT_COLORABLE") << " nodes=" << r.graph.nodes.size()
                    << " components=" << comps << '\n';
            }
        };
    });
    sub("symmetric-cycle", "swap-invariant cycle in the configuration space")->callback([&] {
        action = [&] {
            auto Z = config_space(load(), ctx.guards());
            auto c = find_symmetric_cycle(Z, ctx.guards());
            if (ctx.json()) {
                Json j{{"verdict", c ? "FOUND" : "NONE"}};
                if (c)
                    j["cycle"] = cycle_json(Z.base, *c);
                ctx.emit("symmetric-cycle", j);
            } else if (c) {
                out << "FOUND\n" << detail::cycle_text(Z.base, *c) << "# VERIFIED\n";
            } else {
                out << "NONE\n";
            }
        };
    });
    sub("dual-classify", "complex whose dual is the input")->callback([&] {
        action = [&] {
            auto L = load();
            auto r = dual_classify(L, ctx.guards());
            if (ctx.json())
                ctx.emit("dual-classify", {{"complex", complex_json(r.K)}});
            else
                out << format_complex(r.K);
        };
    });
    {
        auto* s = sub("vkf", "classifying complex of the d-skeleton of the (2d+2)-simplex", false);
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                auto K = vkf_instance(d, ctx.guards());
                if (ctx.json())
                    ctx.emit("vkf", {{"d", d}, {"complex", complex_json(K)}});
                else
                    out << format_complex(K);
            };
        });
    }
    {
        auto* s = sub("report", "verdicts for d = 1..dmax");
        s->add_option("--dmax", dmax)->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto rep = report(K, dmax, ctx.guards());
                if (ctx.json()) {
                    Json j = report_json(K, rep);
                    j.erase("schema");
                    ctx.emit("report", j);
                    return;
                }
                out << "dim K' = " << rep.dual_dimension << ", moment-curve bound d = " << rep.upper_bound << '\n';
                for (const auto& e : rep.entries)
                    out << "d=" << e.d << " representable=" << verdict_name(e.representable) << " (" << e.basis
                        << ") matousek=" << verdict_name(e.matousek.value) << " collapsible="
                        << verdict_name(e.collapsible) << " leray=" << verdict_name(e.leray) << '\n';
            };
        });
    }
    {
        auto* s = sub("render", "SVG of a drawing, interval representation or node graph");
        s->add_option("--svg", svg_file, "output file")->required();
        s->add_option("--object", object)->check(CLI::IsMember({"auto", "drawing", "intervals", "node-graph"}));
        s->callback([&] {
            action = [&] {
                auto K = load();
                auto G = ctx.guards();
                std::string kind = object, svg;
                auto intervals = [&]() -> std::optional<std::string> {
                    auto r = decide_1_representable(K, G);
                    if (!r.intervals)
                        return std::nullopt;
                    return svg_intervals(K, *r.intervals);
                };
                auto drawing = [&]() -> std::optional<std::string> {
                    auto r = decide_2_representable_cograph(K, G);
                    if (!r.drawing)
                        return std::nullopt;
                    return svg_drawing(r.dual.complex, *r.drawing);
                };
                auto nodes = [&] {
                    auto Z = config_space(K, G);
                    return svg_node_graph(Z, node_graph(Z, G), ctx.seed);
                };
                std::optional<std::string> made;
                if (kind == "auto") {
                    if ((made = intervals()))
                        kind = "intervals";
                    else if ((made = drawing()))
                        kind = "drawing";
                    else
                        made = nodes(), kind = "node-graph";
                } else if (kind == "intervals") {
                    made = intervals();
                } else if (kind == "drawing") {
                    made = drawing();
                } else {
                    made = nodes();
                }
                if (!made)
                    throw InputError(Errc::EmptyInput, "no " + kind + " exists for this complex");
                write_file(svg_file, *made);
                if (ctx.json())
                    ctx.emit("render", {{"object", kind}, {"svg", svg_file}});
                else
                    out << "wrote " << kind << " to " << svg_file << '\n';
            };
        });
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    try {
        action();
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const VerificationFailed& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerification;
    }
}

} // namespace drep
