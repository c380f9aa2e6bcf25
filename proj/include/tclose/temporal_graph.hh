#pragma once

#include <tclose/vertex_set.hh>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tclose
{
    using TimeStep = std::int64_t;

    /// Closed range of 1-based time-steps [start, end].
    struct Interval
    {
        TimeStep start;
        TimeStep end;

        /// Throws std::invalid_argument unless 1 <= start <= end.
        static auto checked(TimeStep start, TimeStep end) -> Interval;

        auto length() const -> TimeStep
        {
            return end - start + 1;
        }

        auto contains(TimeStep t) const -> bool
        {
            return start <= t && t <= end;
        }

        auto contains(const Interval & other) const -> bool
        {
            return start <= other.start && other.end <= end;
        }

        auto operator<=> (const Interval &) const = default;
    };

    /// Undirected simple graph, stored as sorted adjacency lists.
    class StaticGraph
    {
        private:
            std::vector<std::vector<Vertex>> _adj;

        public:
            StaticGraph() = default;
            explicit StaticGraph(std::size_t n);

            /// Throws std::invalid_argument on self-loops or out-of-range ids; duplicates are merged.
            StaticGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges);

            auto size() const -> std::size_t
            {
                return _adj.size();
            }

            auto add_edge(Vertex u, Vertex v) -> void;
            auto has_edge(Vertex u, Vertex v) const -> bool;
            auto neighbors(Vertex v) const -> std::span<const Vertex>
            {
                return _adj[v];
            }

            auto edge_count() const -> std::size_t;

            /// Edges as (u, v) with u < v, lexicographically sorted.
            auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

            auto operator== (const StaticGraph &) const -> bool = default;
    };

    /// A footprint edge u < v with its strictly increasing active time-steps.
    struct TemporalEdge
    {
        Vertex u;
        Vertex v;
        std::vector<TimeStep> steps;

        auto operator== (const TemporalEdge &) const -> bool = default;
    };

    /**
     * Immutable temporal graph (G, lambda) on vertices 0..n-1.
     *
     * Every footprint edge carries a non-empty sorted set of active steps in
     * [1, lifetime]. The lifetime is the largest active step, or 1 when there
     * are no edges.
     */
    class TemporalGraph
    {
        private:
            std::size_t _n = 0;
            TimeStep _lifetime = 1;
            std::vector<TemporalEdge> _edges;
            // per vertex: (neighbour, index into _edges), sorted by neighbour
            std::vector<std::vector<std::pair<Vertex, std::size_t>>> _adj;

        public:
            TemporalGraph() = default;

            /**
             * Build from a list of edges. Endpoints may be given in either
             * order and steps in any order; duplicate steps are merged. Throws
             * std::invalid_argument on self-loops, ids >= n, steps < 1, empty
             * step lists, or the same vertex pair listed twice.
             */
            TemporalGraph(std::size_t n, std::vector<TemporalEdge> edges);

            auto size() const -> std::size_t
            {
                return _n;
            }

            auto lifetime() const -> TimeStep
            {
                return _lifetime;
            }

            /// Footprint edges, sorted by (u, v) with u < v.
            auto edges() const -> const std::vector<TemporalEdge> &
            {
                return _edges;
            }

            auto edge_count() const -> std::size_t
            {
                return _edges.size();
            }

            /// Active steps of uv; empty if uv is not a footprint edge.
            auto steps(Vertex u, Vertex v) const -> std::span<const TimeStep>;

            auto has_edge(Vertex u, Vertex v) const -> bool
            {
                return ! steps(u, v).empty();
            }

            /// Is uv active at some step of i?
            auto active_during(Vertex u, Vertex v, const Interval & i) const -> bool;

            auto footprint_neighbors(Vertex v) const -> std::vector<Vertex>;

            auto degree(Vertex v) const -> std::size_t
            {
                return _adj[v].size();
            }

            auto footprint() const -> StaticGraph;

            auto operator== (const TemporalGraph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }
    };

    /// An induced temporal subgraph with the map from its ids back to the parent's.
    struct Subgraph
    {
        TemporalGraph graph;
        std::vector<Vertex> to_original;
    };

    /// G_I: edges active at some step of i. Steps past the lifetime contribute nothing.
    auto graph_in_interval(const TemporalGraph & g, const Interval & i) -> StaticGraph;

    /// N_I(v), sorted. Throws std::out_of_range for v >= n.
    auto neighbors_in_interval(const TemporalGraph & g, Vertex v, const Interval & i) -> std::vector<Vertex>;

    /// CN_I(u, v) = N_I(u) ∩ N_I(v); the two edges to a common neighbour need not share a step.
    auto common_neighbors(const TemporalGraph & g, Vertex u, Vertex v, const Interval & i) -> std::vector<Vertex>;

    /// G - v. Surviving vertices keep their relative order; to_original maps new ids to old.
    auto remove_vertex(const TemporalGraph & g, Vertex v) -> Subgraph;

    /// Subgraph induced by s (ids relabelled densely in increasing order), lifetime recomputed.
    auto induced_subgraph(const TemporalGraph & g, const std::vector<Vertex> & s) -> Subgraph;

    /**
     * Per-step neighbourhood bitsets N_t(v) for t in [1, lifetime], the shared
     * index behind the closure and instability scans.
     */
    class SnapshotIndex
    {
        private:
            std::size_t _n;
            TimeStep _lifetime;
            std::vector<VertexSet> _nbrs; // index (t - 1) * n + v

        public:
            explicit SnapshotIndex(const TemporalGraph & g);

            auto size() const -> std::size_t
            {
                return _n;
            }

            auto lifetime() const -> TimeStep
            {
                return _lifetime;
            }

            auto at(Vertex v, TimeStep t) const -> const VertexSet &
            {
                return _nbrs[(t - 1) * _n + v];
            }

            /// out |= N_t(v) for each t in [from, to]; no-op for an empty range.
            auto accumulate(Vertex v, TimeStep from, TimeStep to, VertexSet & out) const -> void;
    };
}
