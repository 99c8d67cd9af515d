#include <ordmotif/io.hh>
#include <ordmotif/reductions.hh>

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    SimpleGraph::SimpleGraph(vector<string> vertices, vector<pair<size_t, size_t>> edges) :
        _vertices(std::move(vertices)),
        _adjacent(_vertices.size(), vector<bool>(_vertices.size(), false))
    {
        std::set<string> labels(_vertices.begin(), _vertices.end());
        if (labels.size() != _vertices.size())
            throw std::invalid_argument("duplicate vertex label");
        for (auto [u, v] : edges) {
            if (u >= _vertices.size() || v >= _vertices.size())
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("loop at vertex " + _vertices[u]);
            if (_adjacent[u][v])
                throw std::invalid_argument("repeated edge " + _vertices[u] + " " + _vertices[v]);
            _adjacent[u][v] = _adjacent[v][u] = true;
            _edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }

    auto SimpleGraph::with_vertices(size_t n, vector<pair<size_t, size_t>> edges) -> SimpleGraph
    {
        vector<string> labels;
        for (size_t i = 0; i < n; ++i)
            labels.push_back(std::to_string(i));
        return SimpleGraph(std::move(labels), std::move(edges));
    }

    auto SimpleGraph::adjacent(size_t u, size_t v) const -> bool
    {
        return _adjacent.at(u).at(v);
    }

    auto parse_graph(std::string_view text) -> SimpleGraph
    {
        std::istringstream in{string(text)};
        string line;
        size_t line_number = 0;
        std::optional<size_t> n;
        vector<pair<size_t, size_t>> edges;

        auto read_number = [&](std::string_view token) -> size_t {
            size_t value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError(line_number, "expected a non-negative integer, got '" + string(token) + "'");
            return value;
        };

        while (std::getline(in, line)) {
            ++line_number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            std::istringstream fields(line);
            vector<string> tokens;
            for (string t; fields >> t;)
                tokens.push_back(t);
            if (tokens.empty())
                continue;
            if (! n) {
                if (tokens.size() != 1)
                    throw ParseError(line_number, "first line must hold the vertex count");
                n = read_number(tokens[0]);
                continue;
            }
            if (tokens.size() != 2)
                throw ParseError(line_number, "edge lines hold exactly two vertex indices");
            auto u = read_number(tokens[0]), v = read_number(tokens[1]);
            if (u >= *n || v >= *n)
                throw ParseError(line_number, "vertex index out of range");
            edges.emplace_back(u, v);
        }
        if (! n)
            throw ParseError(line_number, "missing vertex count");
        try {
            return SimpleGraph::with_vertices(*n, std::move(edges));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(line_number, e.what());
        }
    }

    namespace
    {
        auto membership_context(const SimpleGraph & g, bool with_bottom) -> FormalContext
        {
            if (g.vertex_count() < 3)
                throw std::invalid_argument("reductions need graphs with at least three vertices");

            auto objects = g.vertices();
            if (with_bottom)
                objects.push_back("⊥");

            vector<string> attributes;
            vector<vector<size_t>> members;
            for (auto [u, v] : g.edges()) {
                attributes.push_back("{" + g.vertices()[u] + "," + g.vertices()[v] + "}");
                members.push_back({u, v});
            }
            for (size_t v = 0; v < g.vertex_count(); ++v) {
                attributes.push_back("{" + g.vertices()[v] + "}");
                members.push_back({v});
            }
            attributes.push_back("∅");
            members.push_back({});

            vector<vector<bool>> incidence(objects.size(), vector<bool>(attributes.size(), false));
            for (size_t m = 0; m < members.size(); ++m)
                for (auto v : members[m])
                    incidence[v][m] = true;
            return FormalContext(std::move(objects), std::move(attributes), incidence);
        }

        /// Tries every injection of pattern vertices into host vertices.
        auto any_injection(const SimpleGraph & host, const SimpleGraph & pattern, const std::function<bool(const vector<size_t> &)> & accept) -> bool
        {
            auto n = pattern.vertex_count();
            if (n > host.vertex_count())
                return false;
            vector<size_t> image;
            vector<bool> used(host.vertex_count(), false);
            std::function<bool()> rec = [&]() -> bool {
                if (image.size() == n)
                    return accept(image);
                for (size_t h = 0; h < host.vertex_count(); ++h) {
                    if (used[h])
                        continue;
                    used[h] = true;
                    image.push_back(h);
                    if (rec())
                        return true;
                    image.pop_back();
                    used[h] = false;
                }
                return false;
            };
            return rec();
        }
    }

    auto reduce_si(const SimpleGraph & g) -> FormalContext
    {
        return membership_context(g, true);
    }

    auto reduce_isi(const SimpleGraph & g) -> FormalContext
    {
        return membership_context(g, false);
    }

    auto brute_force_si(const SimpleGraph & host, const SimpleGraph & pattern) -> bool
    {
        return any_injection(host, pattern, [&](const vector<size_t> & phi) {
            for (auto [u, v] : pattern.edges())
                if (! host.adjacent(phi[u], phi[v]))
                    return false;
            return true;
        });
    }

    auto brute_force_isi(const SimpleGraph & host, const SimpleGraph & pattern) -> bool
    {
        return any_injection(host, pattern, [&](const vector<size_t> & phi) {
            for (size_t u = 0; u < pattern.vertex_count(); ++u)
                for (size_t v = u + 1; v < pattern.vertex_count(); ++v)
                    if (pattern.adjacent(u, v) != host.adjacent(phi[u], phi[v]))
                        return false;
            return true;
        });
    }
}
