#include <tclose/closure.hh>

#include "pair_scan.hh"

#include <algorithm>
#include <stdexcept>

using std::size_t;
using std::vector;

namespace tclose
{
    auto ClosureParams::validate() const -> void
    {
        if (d0 < 0 || d1 < 0 || d2 < 0)
            throw std::invalid_argument("closure parameters must be non-negative");
    }

    auto vertex_closure(const TemporalGraph & g, Vertex v, const ClosureParams & p) -> size_t
    {
        p.validate();
        if (v >= g.size())
            throw std::out_of_range("vertex id out of range");
        detail::PairScanner scanner(g);
        return scanner.vertex_closure(v, p, scanner.whole_graph()).value;
    }

    auto closure_number(const TemporalGraph & g, const ClosureParams & p) -> size_t
    {
        p.validate();
        detail::PairScanner scanner(g);
        auto r = scanner.whole_graph();
        size_t worst = 0;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            worst = std::max(worst, scanner.vertex_closure(v, p, r).value);
        return worst + 1;
    }

    auto weak_closure_number(const TemporalGraph & g, const ClosureParams & p) -> OrderingResult
    {
        p.validate();
        detail::PairScanner scanner(g);
        return detail::greedy_elimination(scanner, [&] (Vertex v, const detail::Restriction & r) {
                return scanner.vertex_closure(v, p, r); });
    }

    auto closure_rate_curve(const TemporalGraph & g, const ClosureParams & p, RateMode mode) -> ClosureRateCurve
    {
        p.validate();
        ClosureRateCurve curve;
        const TimeStep first = 1 + p.d0, last = g.lifetime() - p.d2 - p.d1;
        if (first > last)
            return curve;

        SnapshotIndex index(g);
        vector<size_t> support, adjacent;
        auto bump = [] (vector<size_t> & hist, size_t x) {
            if (hist.size() <= x)
                hist.resize(x + 1, 0);
            ++hist[x];
        };

        const size_t n = g.size();
        vector<VertexSet> window(n, VertexSet(n));
        for (TimeStep a = first ; a <= last ; ++a) {
            for (Vertex v = 0 ; v < n ; ++v) {
                window[v].clear();
                index.accumulate(v, a, a + p.d1, window[v]);
            }
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = u + 1 ; v < n ; ++v) {
                    size_t x = window[u].intersection_count(window[v]);
                    bump(support, x);
                    if (adjacent.size() < support.size())
                        adjacent.resize(support.size(), 0);
                    if (g.active_during(u, v, Interval{a - p.d0, a + p.d1 + p.d2}))
                        ++adjacent[x];
                }
        }

        if (mode == RateMode::Cumulative)
            for (size_t x = support.size() ; x-- > 1 ; ) {
                support[x - 1] += support[x];
                adjacent[x - 1] += adjacent[x];
            }

        for (size_t x = 0 ; x < support.size() ; ++x)
            curve.points.push_back(ClosureRatePoint{x, support[x], adjacent[x],
                    support[x] == 0 ? 0.0 : double(adjacent[x]) / double(support[x])});
        return curve;
    }
}
