#pragma once

// Plain-text file formats: facet lists and realizations.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "drep/complex.hpp"
#include "drep/geometry.hpp"

namespace drep {

namespace detail {

inline std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::vector<std::string> tokens(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
        out.push_back(t);
    return out;
}

} // namespace detail

/// One facet per line, whitespace-separated labels; `#` comments.
inline SimplicialComplex parse_complex(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<VertexLabel>> faces;
    while (std::getline(in, line)) {
        auto t = detail::tokens(detail::strip_comment(line));
        if (!t.empty())
            faces.push_back(std::move(t));
    }
    return build_complex(faces);
}

inline std::string format_complex(const SimplicialComplex& K)
{
    std::string out;
    for (const auto& f : K.facets()) {
        auto labels = K.labels(f);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i)
                out += ' ';
            out += labels[i];
        }
        out += '\n';
    }
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(Errc::Io, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError(Errc::Io, "cannot write '" + path + "'");
    out << content;
    if (!out)
        throw InputError(Errc::Io, "write to '" + path + "' failed");
}

inline SimplicialComplex load_complex(const std::string& path)
{
    return parse_complex(read_file(path));
}

/// Header `d=<n>`, then `labels : coordinates` per facet.
inline LinearRealization parse_realization(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    LinearRealization R;
    bool header = false;
    while (std::getline(in, line)) {
        std::string body = detail::strip_comment(line);
        if (detail::tokens(body).empty())
            continue;
        if (!header) {
            auto t = detail::tokens(body);
            if (t.size() != 1 || t[0].rfind("d=", 0) != 0)
                throw InputError(Errc::Parse, "realization must start with 'd=<n>'");
            try {
                R.d = std::stoi(t[0].substr(2));
            } catch (const std::exception&) {
                throw InputError(Errc::Parse, "bad dimension header '" + t[0] + "'");
            }
            if (R.d < 1)
                throw InputError(Errc::Parse, "dimension must be at least 1");
            header = true;
            continue;
        }
        auto colon = body.rfind(':');
        if (colon == std::string::npos)
            throw InputError(Errc::Parse, "missing ':' in realization line '" + line + "'");
        auto labels = detail::tokens(body.substr(0, colon));
        auto coords = detail::tokens(body.substr(colon + 1));
        if (labels.empty())
            throw InputError(Errc::Parse, "realization line without a facet");
        if (static_cast<int>(coords.size()) != R.d)
            throw InputError(Errc::DimensionMismatch, "expected " + std::to_string(R.d) + " coordinates in '" + line + "'");
        QPoint p;
        for (const auto& c : coords)
            p.push_back(parse_rational(c));
        R.points.emplace_back(std::move(labels), std::move(p));
    }
    if (!header)
        throw InputError(Errc::Parse, "empty realization");
    return R;
}

inline std::string format_realization(const LinearRealization& R)
{
    std::string out = "d=" + std::to_string(R.d) + "\n";
    for (const auto& [labels, p] : R.points) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i)
                out += ' ';
            out += labels[i];
        }
        out += " :";
        for (const auto& c : p)
            out += " " + format_rational(c);
        out += '\n';
    }
    return out;
}

} // namespace drep
