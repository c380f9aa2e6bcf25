#pragma once

#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tclose
{
    enum class PatternKind
    {
        Clique,
        Plex,
        Defective
    };

    auto to_string(PatternKind kind) -> std::string;

    /// Throws std::invalid_argument for anything but "clique", "plex" or "defective".
    auto parse_pattern_kind(std::string_view text) -> PatternKind;

    /**
     * A vertex set with a time window [a, b], b - a >= delta, such that every
     * sliding window [tau, tau + delta] inside [a, b] satisfies the kind's
     * density condition:
     *  - clique: every pair of X is active in the window;
     *  - plex: every member has at most k inactive partners in X;
     *  - defective: at most k pairs of X are inactive.
     */
    struct DensePattern
    {
        PatternKind kind = PatternKind::Clique;
        std::vector<Vertex> vertices;
        Interval window{1, 1};
        std::size_t k = 0;
        TimeStep delta = 0;

        auto operator== (const DensePattern &) const -> bool = default;
    };

    /// Orders by (window start, window end, vertex list).
    auto canonical_less(const DensePattern & a, const DensePattern & b) -> bool;

    auto sort_canonically(std::vector<DensePattern> & patterns) -> void;

    /**
     * Maximal intervals [a, b] ⊆ [1, lifetime], b - a >= delta, in which every
     * window of delta + 1 steps sees uv active. Throws std::invalid_argument if
     * uv is not a footprint edge.
     */
    auto edge_valid_intervals(const TemporalGraph & g, Vertex u, Vertex v, TimeStep delta) -> std::vector<Interval>;

    /// All maximal (vertex- and time-maximal) delta-cliques with at least min_size vertices, canonically ordered.
    auto enumerate_maximal_cliques(const TemporalGraph & g, TimeStep delta, std::size_t min_size = 1)
        -> std::vector<DensePattern>;

    auto enumerate_maximal_plexes(const TemporalGraph & g, TimeStep delta, std::size_t k, std::size_t min_size = 1)
        -> std::vector<DensePattern>;

    auto enumerate_maximal_defective(const TemporalGraph & g, TimeStep delta, std::size_t k, std::size_t min_size = 1)
        -> std::vector<DensePattern>;

    /// Dispatch on kind; k is ignored for cliques.
    auto enumerate_maximal(const TemporalGraph & g, PatternKind kind, TimeStep delta, std::size_t k,
            std::size_t min_size = 1) -> std::vector<DensePattern>;
}
