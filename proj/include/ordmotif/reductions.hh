#pragma once

#include <ordmotif/context.hh>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordmotif
{
    /// Undirected loop-free graph with labelled vertices.
    class SimpleGraph
    {
    public:
        SimpleGraph() = default;
        /// Throws std::invalid_argument on loops, repeated edges, duplicate
        /// labels or out-of-range endpoints.
        SimpleGraph(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

        /// Vertices labelled "0".."n-1".
        static auto with_vertices(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) -> SimpleGraph;

        auto vertex_count() const -> std::size_t { return _vertices.size(); }
        auto vertices() const -> const std::vector<std::string> & { return _vertices; }
        /// Normalized so that first < second, in input order.
        auto edges() const -> const std::vector<std::pair<std::size_t, std::size_t>> & { return _edges; }
        auto adjacent(std::size_t u, std::size_t v) const -> bool;

    private:
        std::vector<std::string> _vertices;
        std::vector<std::pair<std::size_t, std::size_t>> _edges;
        std::vector<std::vector<bool>> _adjacent;
    };

    /// Reads "n" followed by one "u v" line per edge; vertices are 0..n-1.
    auto parse_graph(std::string_view text) -> SimpleGraph;

    /// (V ∪ {⊥}, E ∪ {{v}} ∪ {∅}, ∈). Needs at least three vertices.
    auto reduce_si(const SimpleGraph & g) -> FormalContext;

    /// (V, E ∪ {{v}} ∪ {∅}, ∈). Needs at least three vertices.
    auto reduce_isi(const SimpleGraph & g) -> FormalContext;

    /// Is there an edge-preserving injection of `pattern` into `host`?
    auto brute_force_si(const SimpleGraph & host, const SimpleGraph & pattern) -> bool;

    /// Is `pattern` isomorphic to an induced subgraph of `host`?
    auto brute_force_isi(const SimpleGraph & host, const SimpleGraph & pattern) -> bool;
}
