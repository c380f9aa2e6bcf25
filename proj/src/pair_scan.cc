#include "pair_scan.hh"

#include <algorithm>
#include <limits>

using std::size_t;

namespace tclose::detail
{
    namespace
    {
        auto ceil_div(size_t a, size_t b) -> size_t
        {
            return (a + b - 1) / b;
        }
    }

    PairScanner::PairScanner(const TemporalGraph & g) :
        _g(g),
        _index(g),
        _footprint(g.size(), VertexSet(g.size()))
    {
        for (auto & e : g.edges()) {
            _footprint[e.u].set(e.v);
            _footprint[e.v].set(e.u);
        }
    }

    auto PairScanner::whole_graph() const -> Restriction
    {
        return Restriction{VertexSet::full(_g.size()), _g.lifetime()};
    }

    auto PairScanner::lifetime_of(const VertexSet & alive) const -> TimeStep
    {
        TimeStep result = 1;
        for (auto & e : _g.edges())
            if (alive.test(e.u) && alive.test(e.v))
                result = std::max(result, e.steps.back());
        return result;
    }

    auto PairScanner::pair_closure(Vertex u, Vertex v, const ClosureParams & p, const Restriction & r) const -> size_t
    {
        size_t best = 0;
        TimeStep first = 1 + p.d0, last = r.lifetime - p.d2;
        if (first > last)
            return 0;

        VertexSet nu(_g.size()), nv(_g.size());
        for (TimeStep a = first ; a <= last ; ++a) {
            nu.clear();
            nv.clear();
            for (TimeStep b = a ; b <= std::min(a + p.d1, last) ; ++b) {
                // adjacency only gets easier as the window grows
                if (_g.active_during(u, v, Interval{a - p.d0, b + p.d2}))
                    break;
                nu |= _index.at(u, b);
                nv |= _index.at(v, b);
                best = std::max(best, nu.intersection_count(nv, r.alive));
            }
        }
        return best;
    }

    auto PairScanner::pair_instability(Vertex u, Vertex v, TimeStep d1, PairwiseMode mode,
            const Restriction & r) const -> size_t
    {
        const TimeStep lifetime = r.lifetime;
        const size_t total = _footprint[u].intersection_count(_footprint[v], r.alive);
        if (total == 0)
            return 0;

        size_t best = 0;
        VertexSet base_u(_g.size()), base_v(_g.size()), left_u(_g.size()), left_v(_g.size()),
                  ext_u(_g.size()), ext_v(_g.size());

        auto scan_base = [&] (TimeStep a, TimeStep b) {
            base_u.clear();
            base_v.clear();
            _index.accumulate(u, a, b, base_u);
            _index.accumulate(v, a, b, base_v);
            size_t base = base_u.intersection_count(base_v, r.alive);
            size_t max_growth = total - base;
            if (max_growth <= best)
                return;

            left_u = base_u;
            left_v = base_v;
            for (TimeStep l = 0 ; l <= a - 1 ; ++l) {
                if (l > 0) {
                    if (ceil_div(max_growth, l) <= best)
                        break;
                    left_u |= _index.at(u, a - l);
                    left_v |= _index.at(v, a - l);
                }
                ext_u = left_u;
                ext_v = left_v;
                for (TimeStep lr = 0 ; lr <= lifetime - b ; ++lr) {
                    if (lr > 0) {
                        ext_u |= _index.at(u, b + lr);
                        ext_v |= _index.at(v, b + lr);
                    }
                    size_t span = l + lr;
                    if (span == 0)
                        continue;
                    if (ceil_div(max_growth, span) <= best)
                        break;
                    size_t growth = ext_u.intersection_count(ext_v, r.alive) - base;
                    best = std::max(best, ceil_div(growth, span));
                }
            }
        };

        if (mode == PairwiseMode::ExactLength) {
            for (TimeStep a = 1 ; a + d1 <= lifetime ; ++a)
                scan_base(a, a + d1);
        }
        else {
            for (TimeStep a = 1 ; a <= lifetime ; ++a)
                for (TimeStep b = a ; b <= lifetime ; ++b)
                    scan_base(a, b);
        }
        return best;
    }

    auto PairScanner::vertex_closure(Vertex v, const ClosureParams & p, const Restriction & r) const -> VertexValue
    {
        VertexValue result;
        r.alive.for_each([&] (Vertex u) {
            if (u == v || _footprint[u].intersection_count(_footprint[v], r.alive) <= result.value)
                return;
            auto value = pair_closure(v, u, p, r);
            if (value > result.value) {
                result.value = value;
                result.partner = u;
            }
        });
        return result;
    }

    auto PairScanner::vertex_instability(Vertex v, TimeStep d1, PairwiseMode mode, const Restriction & r) const -> VertexValue
    {
        VertexValue result;
        r.alive.for_each([&] (Vertex u) {
            if (u == v || _footprint[u].intersection_count(_footprint[v], r.alive) <= result.value)
                return;
            auto value = pair_instability(v, u, d1, mode, r);
            if (value > result.value) {
                result.value = value;
                result.partner = u;
            }
        });
        return result;
    }

    auto greedy_elimination(const PairScanner & scanner, const VertexMetric & metric) -> OrderingResult
    {
        const size_t n = scanner.graph().size();
        OrderingResult result;
        auto r = scanner.whole_graph();

        std::vector<VertexValue> values(n);
        for (Vertex v = 0 ; v < n ; ++v)
            values[v] = metric(v, r);

        for (size_t step = 0 ; step < n ; ++step) {
            std::optional<Vertex> pick;
            r.alive.for_each([&] (Vertex v) {
                if (! pick || values[v].value < values[*pick].value)
                    pick = v;
            });

            Vertex w = *pick;
            result.order.push_back(w);
            result.per_step_value.push_back(values[w].value);
            result.value = std::max(result.value, values[w].value);

            r.alive.reset(w);
            auto lifetime = scanner.lifetime_of(r.alive);
            bool lifetime_changed = lifetime != r.lifetime;
            r.lifetime = lifetime;

            r.alive.for_each([&] (Vertex x) {
                if (lifetime_changed || scanner.footprint(x).test(w) || values[x].partner == w)
                    values[x] = metric(x, r);
            });
        }

        return result;
    }
}
