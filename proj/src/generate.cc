#include <tclose/errors.hh>
#include <tclose/generate.hh>

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

using std::size_t;
using std::vector;

namespace tclose
{
    namespace
    {
        /// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
        auto unit(std::mt19937_64 & rng) -> double
        {
            return double(rng() >> 11) * 0x1.0p-53;
        }

        auto check_probability(double p, const char * what) -> void
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
        }
    }

    auto gen_example1(size_t n, TimeStep delta) -> TemporalGraph
    {
        if (n == 0)
            throw std::invalid_argument("example1 needs n >= 1");
        if (delta < 0)
            throw std::invalid_argument("delta must be non-negative");
        if (n > example1_max_n)
            throw SizeGuardError("example1 supports n <= " + std::to_string(example1_max_n));

        std::map<std::pair<Vertex, Vertex>, vector<TimeStep>> steps;
        const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t i = 1 ; i <= subsets ; ++i) {
            TimeStep t = (delta + 2) * TimeStep(i) - 1;
            for (Vertex u = 0 ; u < n ; ++u)
                if ((i >> u) & 1)
                    for (Vertex v = u + 1 ; v < n ; ++v)
                        if ((i >> v) & 1)
                            steps[{u, v}].push_back(t);
        }

        vector<TemporalEdge> edges;
        for (auto & [uv, s] : steps)
            edges.push_back(TemporalEdge{uv.first, uv.second, std::move(s)});
        return TemporalGraph(n, std::move(edges));
    }

    auto gen_moonmoser(size_t parts, TimeStep delta) -> TemporalGraph
    {
        if (parts == 0)
            throw std::invalid_argument("moonmoser needs at least one part");
        if (delta < 0)
            throw std::invalid_argument("delta must be non-negative");

        vector<TimeStep> all;
        for (TimeStep t = 1 ; t <= delta + 1 ; ++t)
            all.push_back(t);

        const size_t n = 3 * parts;
        vector<TemporalEdge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (u / 3 != v / 3)
                    edges.push_back(TemporalEdge{u, v, all});
        return TemporalGraph(n, std::move(edges));
    }

    auto gen_static_lift(const StaticGraph & g, TimeStep lifetime) -> TemporalGraph
    {
        if (lifetime < 1)
            throw std::invalid_argument("lifetime must be at least 1");
        vector<TimeStep> all;
        for (TimeStep t = 1 ; t <= lifetime ; ++t)
            all.push_back(t);

        vector<TemporalEdge> edges;
        for (auto & [u, v] : g.edges())
            edges.push_back(TemporalEdge{u, v, all});
        return TemporalGraph(g.size(), std::move(edges));
    }

    auto gen_random_evolving(size_t n, TimeStep lifetime, double p_init, double flip_rate, std::uint64_t seed)
        -> TemporalGraph
    {
        check_probability(p_init, "p_init");
        check_probability(flip_rate, "flip_rate");
        if (lifetime < 1)
            throw std::invalid_argument("lifetime must be at least 1");

        std::mt19937_64 rng(seed);
        const size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        vector<char> state(pairs, 0);
        vector<vector<TimeStep>> steps(pairs);

        for (TimeStep t = 1 ; t <= lifetime ; ++t) {
            size_t index = 0;
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = u + 1 ; v < n ; ++v, ++index) {
                    double draw = unit(rng);
                    if (t == 1)
                        state[index] = draw < p_init;
                    else if (draw < flip_rate)
                        state[index] = ! state[index];
                    if (state[index])
                        steps[index].push_back(t);
                }
        }

        vector<TemporalEdge> edges;
        size_t index = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v, ++index)
                if (! steps[index].empty())
                    edges.push_back(TemporalEdge{u, v, std::move(steps[index])});
        return TemporalGraph(n, std::move(edges));
    }

    auto GeneratorSpec::validate() const -> void
    {
        if (model != "example1" && model != "moonmoser" && model != "static-lift" && model != "random-evolving")
            throw std::invalid_argument("unknown generator model '" + model + "'");
        if (delta < 0)
            throw std::invalid_argument("delta must be non-negative");
        if (lifetime < 1)
            throw std::invalid_argument("lifetime must be at least 1");
        if (model == "example1" && n == 0)
            throw std::invalid_argument("example1 needs n >= 1");
        if (model == "moonmoser" && n == 0)
            throw std::invalid_argument("moonmoser needs at least one part");
        check_probability(edge_probability, "edge probability");
        check_probability(flip_rate, "flip rate");
    }

    auto generate(const GeneratorSpec & spec) -> TemporalGraph
    {
        spec.validate();
        if (spec.model == "example1")
            return gen_example1(spec.n, spec.delta);
        if (spec.model == "moonmoser")
            return gen_moonmoser(spec.n, spec.delta);
        if (spec.model == "static-lift") {
            auto footprint = gen_random_evolving(spec.n, 1, spec.edge_probability, 0.0, spec.seed).footprint();
            return gen_static_lift(footprint, spec.lifetime);
        }
        return gen_random_evolving(spec.n, spec.lifetime, spec.edge_probability, spec.flip_rate, spec.seed);
    }
}
