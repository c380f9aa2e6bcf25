#pragma once

#include <tclose/closure.hh>
#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <string>

namespace tclose
{
    /// Which base windows [a, b] the pairwise instability scan quantifies over.
    enum class PairwiseMode
    {
        ExactLength, ///< b - a = d1 exactly
        AllIntervals ///< every 1 <= a <= b <= lifetime; d1 is ignored
    };

    auto to_string(PairwiseMode mode) -> std::string;

    /// Smallest eta such that consecutive snapshot neighbourhoods differ by at most eta on either side.
    auto local_instability(const TemporalGraph & g) -> std::size_t;

    /**
     * Smallest integer eta such that extending any base window of any pair by
     * l steps left and l' right (staying inside [1, lifetime]) adds at most
     * eta (l + l') common neighbours.
     */
    auto pairwise_instability(const TemporalGraph & g, TimeStep d1,
            PairwiseMode mode = PairwiseMode::ExactLength) -> std::size_t;

    /// Greedy elimination on each vertex's worst pairwise growth rate within the remaining subgraph.
    auto weak_pairwise_instability(const TemporalGraph & g, TimeStep d1,
            PairwiseMode mode = PairwiseMode::ExactLength) -> OrderingResult;

    /// Greedy elimination on max(vertex closure, vertex pairwise instability), the "b" column.
    auto combined_weak_value(const TemporalGraph & g, const ClosureParams & p,
            PairwiseMode mode = PairwiseMode::ExactLength) -> OrderingResult;

    struct InstabilityReport
    {
        std::size_t local_eta = 0;
        std::size_t pairwise_eta = 0;
        OrderingResult weak_pairwise;
        OrderingResult combined;
        PairwiseMode mode = PairwiseMode::ExactLength;
    };

    auto instability_report(const TemporalGraph & g, const ClosureParams & p,
            PairwiseMode mode = PairwiseMode::ExactLength) -> InstabilityReport;
}
