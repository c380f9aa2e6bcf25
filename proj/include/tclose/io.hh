#pragma once

#include <tclose/bounds.hh>
#include <tclose/closure.hh>
#include <tclose/enumerate.hh>
#include <tclose/instability.hh>
#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tclose
{
    struct ContactRecord
    {
        std::int64_t timestamp;
        std::string u_label;
        std::string v_label;
    };

    /// A binned contact log: the graph plus the external label of every dense id.
    struct ContactGraph
    {
        TemporalGraph graph;
        std::vector<std::string> labels;
        std::int64_t first_timestamp = 0;
        std::int64_t bin_width = 1;
    };

    /**
     * Read `t u v [ignored...]` records (whitespace, tab or comma separated;
     * blank lines and lines starting with '#' skipped; a first line whose
     * timestamp is not an integer is taken as a column header). Throws
     * ParseError with the offending line number.
     */
    auto read_contacts(std::istream & in) -> std::vector<ContactRecord>;

    /**
     * Bin records into time-steps: step(t) = floor((t - t_min) / bin_width) + 1.
     * Empty bins are kept. Labels are numbered in numeric order when every
     * label is an integer and in lexicographic order otherwise, so the result
     * does not depend on the order of the records.
     */
    auto bin_contacts(const std::vector<ContactRecord> & records, std::int64_t bin_width) -> ContactGraph;

    auto parse_contacts(std::istream & in, std::int64_t bin_width) -> ContactGraph;

    /// Native format: header `n lifetime`, then `u v t1 t2 ...` per footprint edge.
    auto parse_native(std::istream & in) -> TemporalGraph;
    auto write_native(std::ostream & out, const TemporalGraph & g) -> void;

    /// Does the first data line look like a native header (exactly two integers)?
    auto looks_native(const std::string & text) -> bool;

    /// `kind a b v1,v2,...`, one pattern per line.
    auto write_patterns(std::ostream & out, const std::vector<DensePattern> & patterns,
            const std::vector<std::string> * labels = nullptr) -> void;

    /// `position,vertex,value` rows with a header line.
    auto write_ordering_csv(std::ostream & out, const OrderingResult & ordering,
            const std::vector<std::string> * labels = nullptr) -> void;

    auto write_curve_csv(std::ostream & out, const ClosureRateCurve & curve) -> void;

    auto write_bound_checks_csv(std::ostream & out, const std::vector<BoundCheck> & checks) -> void;

    /// The table columns for one instance.
    struct StatsRow
    {
        std::string instance;
        std::size_t vertices = 0;
        std::size_t edges = 0;
        TimeStep lifetime = 1;
        std::size_t degree_max = 0;
        std::size_t degree_min = 0;
        std::size_t static_c = 1;
        std::size_t static_gamma = 1;

        struct PerConfig
        {
            ClosureParams params;
            std::size_t c;
            std::size_t gamma;
            std::size_t weak_pairwise_eta;
            std::size_t combined_b;
        };
        std::vector<PerConfig> per_config;

        std::size_t local_eta = 0;
        std::vector<std::pair<TimeStep, std::size_t>> pairwise_eta; ///< (d1, eta)
    };

    /// d1 values for the pairwise columns are the distinct d1 of the configurations, in first-seen order.
    auto compute_stats(const std::string & instance, const TemporalGraph & g,
            const std::vector<ClosureParams> & configs, PairwiseMode mode = PairwiseMode::ExactLength) -> StatsRow;

    /// The four configurations d1 in {0, 5} x d0 = d2 in {0, 10}.
    auto default_stats_configs() -> std::vector<ClosureParams>;

    auto write_stats_csv(std::ostream & out, const std::vector<StatsRow> & rows) -> void;
}
