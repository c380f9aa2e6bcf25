#pragma once

#include <tclose/temporal_graph.hh>

#include <cstddef>
#include <cstdint>
#include <string>

namespace tclose
{
    /// Largest n accepted by gen_example1 (it materialises all 2^n - 1 subsets).
    inline constexpr std::size_t example1_max_n = 20;

    /**
     * Complete footprint on n vertices in which every non-empty subset X_i
     * (i = 1 .. 2^n - 1, vertex v in X_i iff bit v of i is set) is a clique at
     * step (delta + 2) i - 1 and nowhere else. Throws SizeGuardError for
     * n > example1_max_n and std::invalid_argument for n = 0 or delta < 0.
     */
    auto gen_example1(std::size_t n, TimeStep delta) -> TemporalGraph;

    /// Complete multipartite graph with `parts` parts of three vertices, every edge active at 1..delta + 1.
    auto gen_moonmoser(std::size_t parts, TimeStep delta) -> TemporalGraph;

    /// Every edge of the static graph active at every step of 1..lifetime.
    auto gen_static_lift(const StaticGraph & g, TimeStep lifetime) -> TemporalGraph;

    /**
     * Snapshot Markov chain: step 1 is G(n, p_init), and each later step
     * flips every vertex pair independently with probability flip_rate.
     * Deterministic for a given seed. Edges never active are dropped.
     */
    auto gen_random_evolving(std::size_t n, TimeStep lifetime, double p_init, double flip_rate,
            std::uint64_t seed) -> TemporalGraph;

    struct GeneratorSpec
    {
        std::string model; ///< example1 | moonmoser | static-lift | random-evolving
        std::size_t n = 3;
        TimeStep delta = 1;
        TimeStep lifetime = 10;
        double edge_probability = 0.5;
        double flip_rate = 0.1;
        std::uint64_t seed = 1;

        /// Throws std::invalid_argument for an unknown model or out-of-range knobs.
        auto validate() const -> void;
    };

    /// static-lift is driven from the CLI with a G(n, edge_probability) footprint drawn from seed.
    auto generate(const GeneratorSpec & spec) -> TemporalGraph;
}
