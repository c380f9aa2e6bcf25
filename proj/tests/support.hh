#pragma once

#include <tclose/enumerate.hh>
#include <tclose/generate.hh>
#include <tclose/temporal_graph.hh>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace test_support
{
    using namespace tclose;

    /// Every edge active at every step of [1, lifetime].
    inline auto constant(const StaticGraph & g, TimeStep lifetime) -> TemporalGraph
    {
        return gen_static_lift(g, lifetime);
    }

    inline auto complete(std::size_t n) -> StaticGraph
    {
        StaticGraph g(n);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                g.add_edge(u, v);
        return g;
    }

    struct RandomInstance
    {
        TemporalGraph graph;
        std::size_t n;
        TimeStep lifetime;
        double flip;
        std::uint64_t seed;
    };

    /// Deterministic instance family: n in [lo_n, hi_n], lifetime in [1, hi_lifetime], flip in {0, 0.05, 0.2}.
    inline auto random_instance(std::uint64_t seed, std::size_t lo_n = 2, std::size_t hi_n = 10,
            TimeStep hi_lifetime = 20) -> RandomInstance
    {
        std::mt19937_64 rng(seed * 7919 + 17);
        std::size_t n = lo_n + rng() % (hi_n - lo_n + 1);
        TimeStep lifetime = 1 + TimeStep(rng() % std::uint64_t(hi_lifetime));
        static constexpr double flips[] = {0.0, 0.05, 0.2};
        double flip = flips[rng() % 3];
        double p = 0.3 + 0.4 * double(rng() % 1000) / 1000.0;
        return RandomInstance{gen_random_evolving(n, lifetime, p, flip, seed), n, lifetime, flip, seed};
    }

    inline auto sorted(std::vector<DensePattern> patterns) -> std::vector<DensePattern>
    {
        sort_canonically(patterns);
        return patterns;
    }

    inline auto contains(const std::vector<DensePattern> & patterns, const std::vector<Vertex> & vertices,
            Interval window) -> bool
    {
        return std::any_of(patterns.begin(), patterns.end(), [&] (const DensePattern & p) {
                return p.vertices == vertices && p.window == window; });
    }
}
