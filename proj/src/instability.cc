#include <tclose/instability.hh>

#include "pair_scan.hh"

#include <algorithm>
#include <stdexcept>

using std::size_t;

namespace tclose
{
    namespace
    {
        auto check_d1(TimeStep d1) -> void
        {
            if (d1 < 0)
                throw std::invalid_argument("d1 must be non-negative");
        }
    }

    auto to_string(PairwiseMode mode) -> std::string
    {
        switch (mode) {
            case PairwiseMode::ExactLength:  return "exact-length";
            case PairwiseMode::AllIntervals: return "all-intervals";
        }
        return "?";
    }

    auto local_instability(const TemporalGraph & g) -> size_t
    {
        SnapshotIndex index(g);
        size_t eta = 0;
        for (TimeStep t = 1 ; t < g.lifetime() ; ++t)
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                auto & now = index.at(v, t);
                auto & next = index.at(v, t + 1);
                eta = std::max({eta, now.difference_count(next), next.difference_count(now)});
            }
        return eta;
    }

    auto pairwise_instability(const TemporalGraph & g, TimeStep d1, PairwiseMode mode) -> size_t
    {
        check_d1(d1);
        detail::PairScanner scanner(g);
        auto r = scanner.whole_graph();
        size_t eta = 0;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v)
                if (scanner.footprint(u).intersection_count(scanner.footprint(v)) > eta)
                    eta = std::max(eta, scanner.pair_instability(u, v, d1, mode, r));
        return eta;
    }

    auto weak_pairwise_instability(const TemporalGraph & g, TimeStep d1, PairwiseMode mode) -> OrderingResult
    {
        check_d1(d1);
        detail::PairScanner scanner(g);
        return detail::greedy_elimination(scanner, [&] (Vertex v, const detail::Restriction & r) {
                return scanner.vertex_instability(v, d1, mode, r); });
    }

    auto combined_weak_value(const TemporalGraph & g, const ClosureParams & p, PairwiseMode mode) -> OrderingResult
    {
        p.validate();
        detail::PairScanner scanner(g);
        return detail::greedy_elimination(scanner, [&] (Vertex v, const detail::Restriction & r) {
                auto closure = scanner.vertex_closure(v, p, r);
                auto instability = scanner.vertex_instability(v, p.d1, mode, r);
                return closure.value >= instability.value ? closure : instability; });
    }

    auto instability_report(const TemporalGraph & g, const ClosureParams & p, PairwiseMode mode) -> InstabilityReport
    {
        InstabilityReport report;
        report.mode = mode;
        report.local_eta = local_instability(g);
        report.pairwise_eta = pairwise_instability(g, p.d1, mode);
        report.weak_pairwise = weak_pairwise_instability(g, p.d1, mode);
        report.combined = combined_weak_value(g, p, mode);
        return report;
    }
}
