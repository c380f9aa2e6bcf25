#pragma once

#include <tclose/closure.hh>
#include <tclose/instability.hh>
#include <tclose/temporal_graph.hh>
#include <tclose/vertex_set.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace tclose::detail
{
    /// An induced subgraph described by its surviving vertices and its (recomputed) lifetime.
    struct Restriction
    {
        VertexSet alive;
        TimeStep lifetime;
    };

    struct VertexValue
    {
        std::size_t value = 0;
        std::optional<Vertex> partner;
    };

    /**
     * Pair-level closure and instability scans over snapshot bitsets. All
     * queries take a Restriction so that suffix subgraphs of an elimination
     * ordering never have to be materialised.
     */
    class PairScanner
    {
        private:
            const TemporalGraph & _g;
            SnapshotIndex _index;
            std::vector<VertexSet> _footprint;

        public:
            explicit PairScanner(const TemporalGraph & g);

            auto graph() const -> const TemporalGraph &
            {
                return _g;
            }

            auto footprint(Vertex v) const -> const VertexSet &
            {
                return _footprint[v];
            }

            auto whole_graph() const -> Restriction;

            /// Lifetime of the subgraph induced by alive (1 if it has no edges).
            auto lifetime_of(const VertexSet & alive) const -> TimeStep;

            auto pair_closure(Vertex u, Vertex v, const ClosureParams & p, const Restriction & r) const -> std::size_t;

            auto pair_instability(Vertex u, Vertex v, TimeStep d1, PairwiseMode mode,
                    const Restriction & r) const -> std::size_t;

            auto vertex_closure(Vertex v, const ClosureParams & p, const Restriction & r) const -> VertexValue;

            auto vertex_instability(Vertex v, TimeStep d1, PairwiseMode mode, const Restriction & r) const -> VertexValue;
    };

    using VertexMetric = std::function<auto (Vertex, const Restriction &) -> VertexValue>;

    /**
     * Repeatedly delete the alive vertex of least metric value (smallest id on
     * ties). The metric must depend only on the vertex's footprint
     * neighbourhood, its recorded partner and the lifetime, and must not
     * increase as vertices are deleted; only vertices whose value could have
     * changed are re-evaluated after each deletion.
     */
    auto greedy_elimination(const PairScanner & scanner, const VertexMetric & metric) -> OrderingResult;
}
