#pragma once

#include <tclose/closure.hh>
#include <tclose/enumerate.hh>
#include <tclose/instability.hh>
#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <vector>

/**
 * Brute-force reference implementations, evaluated straight from the
 * definitions. They deliberately share nothing with the engines beyond the
 * TemporalGraph accessors: neighbourhoods are rebuilt from the raw step
 * lists with ordinary sets, and every quantifier is scanned in full.
 */
namespace tclose::oracle
{
    inline constexpr std::size_t enumerate_max_n = 20;
    inline constexpr std::size_t orderings_max_n = 7;

    /// Throws SizeGuardError when n > enumerate_max_n.
    auto oracle_enumerate(const TemporalGraph & g, TimeStep delta, PatternKind kind, std::size_t k)
        -> std::vector<DensePattern>;

    auto oracle_vertex_closure(const TemporalGraph & g, Vertex v, const ClosureParams & p) -> std::size_t;
    auto oracle_closure(const TemporalGraph & g, const ClosureParams & p) -> std::size_t;
    auto oracle_local_eta(const TemporalGraph & g) -> std::size_t;
    auto oracle_pairwise_eta(const TemporalGraph & g, TimeStep d1, PairwiseMode mode = PairwiseMode::ExactLength)
        -> std::size_t;

    /// Worst pairwise growth rate over pairs containing v.
    auto oracle_vertex_pairwise_eta(const TemporalGraph & g, Vertex v, TimeStep d1,
            PairwiseMode mode = PairwiseMode::ExactLength) -> std::size_t;

    enum class OrderingMetric
    {
        Closure,
        Pairwise,
        Combined
    };

    struct OrderingOptimum
    {
        std::vector<Vertex> order;
        std::size_t value = 0;
    };

    /**
     * Minimum over all n! orderings of the largest suffix-subgraph metric
     * value. Throws SizeGuardError when n > orderings_max_n.
     */
    auto oracle_weak_orderings(const TemporalGraph & g, const ClosureParams & p, OrderingMetric metric,
            PairwiseMode mode = PairwiseMode::ExactLength) -> OrderingOptimum;

    /// Static closure: 1 + max common neighbours of a non-adjacent pair.
    auto static_closure(const StaticGraph & g) -> std::size_t;

    /// Static weak closure, minimised over all orderings (n <= orderings_max_n).
    auto static_weak_closure(const StaticGraph & g) -> std::size_t;

    /// Maximal cliques of a static graph by subset enumeration (n <= enumerate_max_n), each sorted.
    auto static_maximal_cliques(const StaticGraph & g) -> std::vector<std::vector<Vertex>>;
}
