#include <tclose/errors.hh>
#include <tclose/oracle.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using std::set;
using std::size_t;
using std::vector;

namespace tclose::oracle
{
    namespace
    {
        /// count[u][w][t]: number of active steps of uw that are <= t, for t in 0..lifetime.
        class StepTable
        {
            private:
                size_t _n;
                TimeStep _lifetime;
                vector<int> _count;

                auto cell(Vertex u, Vertex w, TimeStep t) const -> size_t
                {
                    return (size_t(u) * _n + w) * size_t(_lifetime + 1) + size_t(t);
                }

            public:
                explicit StepTable(const TemporalGraph & g) :
                    _n(g.size()),
                    _lifetime(g.lifetime()),
                    _count(_n * _n * size_t(_lifetime + 1), 0)
                {
                    for (Vertex u = 0 ; u < _n ; ++u)
                        for (Vertex w = 0 ; w < _n ; ++w) {
                            if (u == w)
                                continue;
                            auto steps = g.steps(u, w);
                            int running = 0;
                            for (TimeStep t = 1 ; t <= _lifetime ; ++t) {
                                for (auto s : steps)
                                    if (s == t)
                                        ++running;
                                _count[cell(u, w, t)] = running;
                            }
                        }
                }

                auto lifetime() const -> TimeStep
                {
                    return _lifetime;
                }

                auto size() const -> size_t
                {
                    return _n;
                }

                /// Is uw active at some step of [lo, hi] ∩ [1, lifetime]?
                auto active(Vertex u, Vertex w, TimeStep lo, TimeStep hi) const -> bool
                {
                    if (u == w)
                        return false;
                    lo = std::max<TimeStep>(lo, 1);
                    hi = std::min(hi, _lifetime);
                    if (lo > hi)
                        return false;
                    return _count[cell(u, w, hi)] - _count[cell(u, w, lo - 1)] > 0;
                }

                auto neighbors(Vertex v, TimeStep lo, TimeStep hi) const -> set<Vertex>
                {
                    set<Vertex> result;
                    for (Vertex w = 0 ; w < _n ; ++w)
                        if (active(v, w, lo, hi))
                            result.insert(w);
                    return result;
                }

                auto common(Vertex u, Vertex v, TimeStep lo, TimeStep hi) const -> set<Vertex>
                {
                    set<Vertex> result;
                    for (Vertex w = 0 ; w < _n ; ++w)
                        if (active(u, w, lo, hi) && active(v, w, lo, hi))
                            result.insert(w);
                    return result;
                }
        };

        auto window_ok(const StepTable & table, TimeStep tau, TimeStep delta, PatternKind kind, size_t k,
                const vector<Vertex> & x) -> bool
        {
            size_t inactive_pairs = 0;
            for (size_t i = 0 ; i < x.size() ; ++i) {
                size_t misses = 0;
                for (size_t j = 0 ; j < x.size() ; ++j)
                    if (i != j && ! table.active(x[i], x[j], tau, tau + delta))
                        ++misses;
                if (kind == PatternKind::Clique && misses > 0)
                    return false;
                if (kind == PatternKind::Plex && misses > k)
                    return false;
                inactive_pairs += misses;
            }
            return kind != PatternKind::Defective || inactive_pairs / 2 <= k;
        }

        auto pair_pairwise_eta(const StepTable & table, Vertex u, Vertex v, TimeStep d1, PairwiseMode mode) -> size_t
        {
            const TimeStep lifetime = table.lifetime();
            size_t best = 0;
            auto scan = [&] (TimeStep a, TimeStep b) {
                auto base = table.common(u, v, a, b);
                for (TimeStep l = 0 ; a - l >= 1 ; ++l)
                    for (TimeStep lr = 0 ; b + lr <= lifetime ; ++lr) {
                        if (l + lr == 0)
                            continue;
                        auto ext = table.common(u, v, a - l, b + lr);
                        size_t growth = 0;
                        for (auto w : ext)
                            if (! base.count(w))
                                ++growth;
                        size_t span = size_t(l + lr);
                        best = std::max(best, (growth + span - 1) / span);
                    }
            };
            if (mode == PairwiseMode::ExactLength) {
                for (TimeStep a = 1 ; a + d1 <= lifetime ; ++a)
                    scan(a, a + d1);
            }
            else {
                for (TimeStep a = 1 ; a <= lifetime ; ++a)
                    for (TimeStep b = a ; b <= lifetime ; ++b)
                        scan(a, b);
            }
            return best;
        }

        auto vertex_closure_in(const StepTable & table, Vertex v, const ClosureParams & p) -> size_t
        {
            size_t best = 0;
            const TimeStep lo = 1 + p.d0, hi = table.lifetime() - p.d2;
            for (Vertex u = 0 ; u < table.size() ; ++u) {
                if (u == v)
                    continue;
                for (TimeStep a = lo ; a <= hi ; ++a)
                    for (TimeStep b = a ; b <= hi && b - a <= p.d1 ; ++b)
                        if (! table.active(u, v, a - p.d0, b + p.d2))
                            best = std::max(best, table.common(u, v, a, b).size());
            }
            return best;
        }

        auto vertex_pairwise_in(const StepTable & table, Vertex v, TimeStep d1, PairwiseMode mode) -> size_t
        {
            size_t best = 0;
            for (Vertex u = 0 ; u < table.size() ; ++u)
                if (u != v)
                    best = std::max(best, pair_pairwise_eta(table, v, u, d1, mode));
            return best;
        }

        auto check_params(const ClosureParams & p) -> void
        {
            p.validate();
        }

        auto vertices_of(std::uint32_t mask, size_t n) -> vector<Vertex>
        {
            vector<Vertex> result;
            for (Vertex v = 0 ; v < n ; ++v)
                if ((mask >> v) & 1)
                    result.push_back(v);
            return result;
        }

        /// Minimum over all orderings of max value(suffix set, vertex), with value memoised per (suffix, vertex).
        auto best_ordering(size_t n, const std::function<size_t (std::uint32_t, Vertex)> & value) -> OrderingOptimum
        {
            std::map<std::pair<std::uint32_t, Vertex>, size_t> memo;
            auto cached = [&] (std::uint32_t suffix, Vertex v) {
                auto key = std::pair{suffix, v};
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, value(suffix, v)).first;
                return it->second;
            };

            vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            OrderingOptimum best;
            bool first = true;
            do {
                std::uint32_t suffix = (std::uint32_t{1} << n) - 1;
                size_t worst = 0;
                for (auto v : order) {
                    worst = std::max(worst, cached(suffix, v));
                    suffix &= ~(std::uint32_t{1} << v);
                }
                if (first || worst < best.value) {
                    best.value = worst;
                    best.order = order;
                    first = false;
                }
            } while (std::next_permutation(order.begin(), order.end()));
            return best;
        }
    }

    auto oracle_enumerate(const TemporalGraph & g, TimeStep delta, PatternKind kind, size_t k) -> vector<DensePattern>
    {
        const size_t n = g.size();
        if (n > enumerate_max_n)
            throw SizeGuardError("oracle enumeration supports n <= " + std::to_string(enumerate_max_n));
        if (delta < 0)
            throw std::invalid_argument("delta must be non-negative");

        StepTable table(g);
        const TimeStep windows = g.lifetime() - delta;
        const std::uint32_t subsets = std::uint32_t{1} << n;

        // time-maximal windows (first tau, last tau) of every vertex set
        vector<vector<std::pair<TimeStep, TimeStep>>> runs(subsets);
        for (std::uint32_t mask = 1 ; mask < subsets ; ++mask) {
            auto x = vertices_of(mask, n);
            TimeStep start = 0;
            for (TimeStep tau = 1 ; tau <= windows + 1 ; ++tau) {
                bool ok = tau <= windows && window_ok(table, tau, delta, kind, k, x);
                if (ok && start == 0)
                    start = tau;
                else if (! ok && start != 0) {
                    runs[mask].emplace_back(start, tau - 1);
                    start = 0;
                }
            }
        }

        vector<DensePattern> result;
        for (std::uint32_t mask = 1 ; mask < subsets ; ++mask)
            for (auto [first, last] : runs[mask]) {
                bool contained = false;
                for (Vertex w = 0 ; w < n && ! contained ; ++w) {
                    if ((mask >> w) & 1)
                        continue;
                    for (auto [f2, l2] : runs[mask | (std::uint32_t{1} << w)])
                        if (f2 <= first && last <= l2)
                            contained = true;
                }
                if (! contained)
                    result.push_back(DensePattern{kind, vertices_of(mask, n), Interval{first, last + delta},
                            kind == PatternKind::Clique ? 0 : k, delta});
            }

        sort_canonically(result);
        return result;
    }

    auto oracle_vertex_closure(const TemporalGraph & g, Vertex v, const ClosureParams & p) -> size_t
    {
        check_params(p);
        return vertex_closure_in(StepTable(g), v, p);
    }

    auto oracle_closure(const TemporalGraph & g, const ClosureParams & p) -> size_t
    {
        check_params(p);
        StepTable table(g);
        size_t worst = 0;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            worst = std::max(worst, vertex_closure_in(table, v, p));
        return worst + 1;
    }

    auto oracle_local_eta(const TemporalGraph & g) -> size_t
    {
        StepTable table(g);
        size_t eta = 0;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            for (TimeStep t = 1 ; t + 1 <= g.lifetime() ; ++t) {
                auto now = table.neighbors(v, t, t), next = table.neighbors(v, t + 1, t + 1);
                size_t lost = 0, gained = 0;
                for (auto w : now)
                    lost += ! next.count(w);
                for (auto w : next)
                    gained += ! now.count(w);
                eta = std::max({eta, lost, gained});
            }
        return eta;
    }

    auto oracle_pairwise_eta(const TemporalGraph & g, TimeStep d1, PairwiseMode mode) -> size_t
    {
        StepTable table(g);
        size_t eta = 0;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v)
                eta = std::max(eta, pair_pairwise_eta(table, u, v, d1, mode));
        return eta;
    }

    auto oracle_vertex_pairwise_eta(const TemporalGraph & g, Vertex v, TimeStep d1, PairwiseMode mode) -> size_t
    {
        return vertex_pairwise_in(StepTable(g), v, d1, mode);
    }

    auto oracle_weak_orderings(const TemporalGraph & g, const ClosureParams & p, OrderingMetric metric,
            PairwiseMode mode) -> OrderingOptimum
    {
        check_params(p);
        const size_t n = g.size();
        if (n > orderings_max_n)
            throw SizeGuardError("ordering oracle supports n <= " + std::to_string(orderings_max_n));

        return best_ordering(n, [&] (std::uint32_t suffix, Vertex v) -> size_t {
            auto members = vertices_of(suffix, n);
            auto sub = induced_subgraph(g, members);
            StepTable table(sub.graph);
            Vertex local = Vertex(std::find(sub.to_original.begin(), sub.to_original.end(), v) - sub.to_original.begin());
            size_t closure = 0, pairwise = 0;
            if (metric != OrderingMetric::Pairwise)
                closure = vertex_closure_in(table, local, p);
            if (metric != OrderingMetric::Closure)
                pairwise = vertex_pairwise_in(table, local, p.d1, mode);
            return std::max(closure, pairwise);
        });
    }

    auto static_closure(const StaticGraph & g) -> size_t
    {
        size_t worst = 0;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v) {
                if (g.has_edge(u, v))
                    continue;
                size_t common = 0;
                for (Vertex w = 0 ; w < g.size() ; ++w)
                    common += g.has_edge(u, w) && g.has_edge(v, w);
                worst = std::max(worst, common);
            }
        return worst + 1;
    }

    auto static_weak_closure(const StaticGraph & g) -> size_t
    {
        const size_t n = g.size();
        if (n > orderings_max_n)
            throw SizeGuardError("ordering oracle supports n <= " + std::to_string(orderings_max_n));

        auto best = best_ordering(n, [&] (std::uint32_t suffix, Vertex v) -> size_t {
            size_t worst = 0;
            for (Vertex u = 0 ; u < n ; ++u) {
                if (u == v || ! ((suffix >> u) & 1) || g.has_edge(u, v))
                    continue;
                size_t common = 0;
                for (Vertex w = 0 ; w < n ; ++w)
                    common += ((suffix >> w) & 1) && g.has_edge(u, w) && g.has_edge(v, w);
                worst = std::max(worst, common);
            }
            return worst;
        });
        return best.value + 1;
    }

    auto static_maximal_cliques(const StaticGraph & g) -> vector<vector<Vertex>>
    {
        const size_t n = g.size();
        if (n > enumerate_max_n)
            throw SizeGuardError("oracle enumeration supports n <= " + std::to_string(enumerate_max_n));

        auto is_clique = [&] (const vector<Vertex> & x) {
            for (size_t i = 0 ; i < x.size() ; ++i)
                for (size_t j = i + 1 ; j < x.size() ; ++j)
                    if (! g.has_edge(x[i], x[j]))
                        return false;
            return true;
        };

        vector<vector<Vertex>> result;
        for (std::uint32_t mask = 1 ; mask < (std::uint32_t{1} << n) ; ++mask) {
            auto x = vertices_of(mask, n);
            if (! is_clique(x))
                continue;
            bool maximal = true;
            for (Vertex w = 0 ; w < n && maximal ; ++w)
                if (! ((mask >> w) & 1)) {
                    auto bigger = vertices_of(mask | (std::uint32_t{1} << w), n);
                    if (is_clique(bigger))
                        maximal = false;
                }
            if (maximal)
                result.push_back(std::move(x));
        }
        std::sort(result.begin(), result.end());
        return result;
    }
}
