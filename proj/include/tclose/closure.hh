#pragma once

#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <vector>

namespace tclose
{
    /// Look-back padding d0, window slack d1 and look-ahead padding d2 of the temporal closure condition.
    struct ClosureParams
    {
        TimeStep d0 = 0;
        TimeStep d1 = 0;
        TimeStep d2 = 0;

        /// Throws std::invalid_argument if any component is negative.
        auto validate() const -> void;

        auto operator<=> (const ClosureParams &) const = default;
    };

    /**
     * A vertex elimination ordering with the value each vertex had in the
     * subgraph induced by itself and everything after it.
     */
    struct OrderingResult
    {
        std::vector<Vertex> order;
        std::vector<std::size_t> per_step_value;
        std::size_t value = 0;
    };

    struct ClosureRatePoint
    {
        std::size_t x;
        std::size_t support;
        std::size_t adjacent;
        double rate;
    };

    struct ClosureRateCurve
    {
        std::vector<ClosureRatePoint> points;
    };

    enum class RateMode
    {
        Cumulative, ///< tuples with at least x common neighbours
        Exact       ///< tuples with exactly x common neighbours
    };

    /**
     * Largest |CN_[a,b](u, v)| over partners u != v and windows
     * [a, b] ⊆ [1 + d0, lifetime - d2] with b - a <= d1 such that u and v are
     * not adjacent during [a - d0, b + d2]; 0 when nothing is eligible.
     */
    auto vertex_closure(const TemporalGraph & g, Vertex v, const ClosureParams & p) -> std::size_t;

    /// Least c >= 1 for which g is (d0, d1, d2, c)-closed.
    auto closure_number(const TemporalGraph & g, const ClosureParams & p) -> std::size_t;

    /**
     * Greedy minimum-closure elimination (ties to the smallest id). Since a
     * vertex's closure never grows when other vertices are deleted, the
     * greedy value is the optimum over all orderings; the weak closure
     * number is value + 1.
     */
    auto weak_closure_number(const TemporalGraph & g, const ClosureParams & p) -> OrderingResult;

    /// Adjacency rate of ([a, a + d1], u, v) tuples bucketed by common-neighbour count.
    auto closure_rate_curve(const TemporalGraph & g, const ClosureParams & p,
            RateMode mode = RateMode::Cumulative) -> ClosureRateCurve;
}
