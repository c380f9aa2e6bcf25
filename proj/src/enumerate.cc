#include <tclose/enumerate.hh>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

using std::size_t;
using std::string;
using std::vector;

namespace tclose
{
    auto to_string(PatternKind kind) -> string
    {
        switch (kind) {
            case PatternKind::Clique:    return "clique";
            case PatternKind::Plex:      return "plex";
            case PatternKind::Defective: return "defective";
        }
        return "?";
    }

    auto parse_pattern_kind(std::string_view text) -> PatternKind
    {
        if (text == "clique")
            return PatternKind::Clique;
        if (text == "plex")
            return PatternKind::Plex;
        if (text == "defective")
            return PatternKind::Defective;
        throw std::invalid_argument("unknown pattern kind '" + string(text) + "'");
    }

    auto canonical_less(const DensePattern & a, const DensePattern & b) -> bool
    {
        if (a.window.start != b.window.start)
            return a.window.start < b.window.start;
        if (a.window.end != b.window.end)
            return a.window.end < b.window.end;
        return a.vertices < b.vertices;
    }

    auto sort_canonically(vector<DensePattern> & patterns) -> void
    {
        std::sort(patterns.begin(), patterns.end(), canonical_less);
    }

    auto edge_valid_intervals(const TemporalGraph & g, Vertex u, Vertex v, TimeStep delta) -> vector<Interval>
    {
        if (delta < 0)
            throw std::invalid_argument("delta must be non-negative");
        auto steps = g.steps(u, v);
        if (steps.empty())
            throw std::invalid_argument("not a footprint edge: " + std::to_string(u) + "-" + std::to_string(v));

        vector<Interval> result;
        auto close_run = [&] (TimeStep first, TimeStep last) {
            TimeStep a = std::max<TimeStep>(1, first - delta), b = std::min(g.lifetime(), last + delta);
            if (b - a >= delta)
                result.push_back(Interval{a, b});
        };

        TimeStep run_start = steps.front();
        for (size_t i = 1 ; i < steps.size() ; ++i)
            if (steps[i] - steps[i - 1] >= delta + 2) {
                close_run(run_start, steps[i - 1]);
                run_start = steps[i];
            }
        close_run(run_start, steps.back());
        return result;
    }

    namespace
    {
        /// Bit tau - 1 marks sliding window [tau, tau + delta].
        using WindowSet = VertexSet;

        /**
         * For every sliding window [tau, tau + delta], tau in 1..windows, the
         * static graph of pairs active somewhere inside it.
         */
        class WindowGraphs
        {
            private:
                size_t _n;
                TimeStep _windows;
                vector<VertexSet> _adj;

            public:
                WindowGraphs(const TemporalGraph & g, TimeStep delta) :
                    _n(g.size()),
                    _windows(std::max<TimeStep>(0, g.lifetime() - delta)),
                    _adj(static_cast<size_t>(_windows) * _n, VertexSet(_n))
                {
                    for (auto & e : g.edges())
                        for (auto & i : edge_valid_intervals(g, e.u, e.v, delta))
                            for (TimeStep tau = i.start ; tau <= i.end - delta ; ++tau) {
                                _adj[(tau - 1) * _n + e.u].set(e.v);
                                _adj[(tau - 1) * _n + e.v].set(e.u);
                            }
                }

                auto windows() const -> TimeStep
                {
                    return _windows;
                }

                auto at(TimeStep tau, Vertex v) const -> const VertexSet &
                {
                    return _adj[(tau - 1) * _n + v];
                }
        };

        auto make_pattern(PatternKind kind, vector<Vertex> vertices, TimeStep first_tau, TimeStep last_tau,
                TimeStep delta, size_t k) -> DensePattern
        {
            return DensePattern{kind, std::move(vertices), Interval{first_tau, last_tau + delta},
                kind == PatternKind::Clique ? 0 : k, delta};
        }

        /// Maximal cliques of a static graph given as adjacency bitsets, by Bron-Kerbosch with Tomita pivoting.
        class CliqueLister
        {
            private:
                const vector<VertexSet> & _adj;
                vector<Vertex> _current;

                template <typename F_>
                auto expand(VertexSet candidates, VertexSet excluded, F_ & emit) -> void
                {
                    if (candidates.none()) {
                        if (excluded.none())
                            emit(_current);
                        return;
                    }

                    std::optional<Vertex> pivot;
                    size_t pivot_score = 0;
                    auto consider = [&] (Vertex u) {
                        size_t score = _adj[u].intersection_count(candidates);
                        if (! pivot || score > pivot_score) {
                            pivot = u;
                            pivot_score = score;
                        }
                    };
                    candidates.for_each(consider);
                    excluded.for_each(consider);

                    VertexSet branch = candidates;
                    branch.subtract(_adj[*pivot]);
                    branch.for_each([&] (Vertex v) {
                        VertexSet next_candidates = candidates, next_excluded = excluded;
                        next_candidates &= _adj[v];
                        next_excluded &= _adj[v];
                        _current.push_back(v);
                        expand(std::move(next_candidates), std::move(next_excluded), emit);
                        _current.pop_back();
                        candidates.reset(v);
                        excluded.set(v);
                    });
                }

            public:
                explicit CliqueLister(const vector<VertexSet> & adj) :
                    _adj(adj)
                {
                }

                template <typename F_>
                auto run(const VertexSet & vertices, F_ && emit) -> void
                {
                    expand(vertices, VertexSet(vertices.capacity()), emit);
                }
        };

        auto is_clique_in_window(const WindowGraphs & w, TimeStep tau, const vector<Vertex> & clique) -> bool
        {
            for (size_t i = 0 ; i < clique.size() ; ++i)
                for (size_t j = i + 1 ; j < clique.size() ; ++j)
                    if (! w.at(tau, clique[i]).test(clique[j]))
                        return false;
            return true;
        }

        auto edges_within(const vector<VertexSet> & h, const WindowGraphs & w, TimeStep tau) -> bool
        {
            for (Vertex v = 0 ; v < h.size() ; ++v)
                if (! h[v].is_subset_of(w.at(tau, v)))
                    return false;
            return true;
        }

        /**
         * A maximal delta-clique (X, [s, e + delta]) is exactly a maximal
         * clique X of the graph H of pairs active in every window s..e, such
         * that X stops being a clique in window s - 1 and in window e + 1.
         * For each start s we shrink H one window at a time and list its
         * maximal cliques only where one of the two boundary windows could
         * still break some of them.
         */
        auto cliques_by_window_runs(const TemporalGraph & g, TimeStep delta) -> vector<DensePattern>
        {
            vector<DensePattern> result;
            const size_t n = g.size();
            WindowGraphs w(g, delta);
            const TimeStep last = w.windows();
            vector<VertexSet> h(n, VertexSet(n));
            CliqueLister lister(h);

            for (TimeStep s = 1 ; s <= last ; ++s) {
                for (Vertex v = 0 ; v < n ; ++v)
                    h[v] = w.at(s, v);

                for (TimeStep e = s ; e <= last ; ++e) {
                    if (e > s)
                        for (Vertex v = 0 ; v < n ; ++v)
                            h[v] &= w.at(e, v);

                    VertexSet non_isolated(n);
                    for (Vertex v = 0 ; v < n ; ++v)
                        if (! h[v].none())
                            non_isolated.set(v);

                    // singletons are cliques in every window, so only the full run is time-maximal
                    if (s == 1 && (e == last || non_isolated.none()))
                        for (Vertex v = 0 ; v < n ; ++v)
                            if (! non_isolated.test(v))
                                result.push_back(make_pattern(PatternKind::Clique, {v}, 1, last, delta, 0));

                    if (non_isolated.none())
                        break;

                    bool right_open = e < last, left_open = s > 1;
                    if ((right_open && edges_within(h, w, e + 1)) || (left_open && edges_within(h, w, s - 1)))
                        continue;

                    lister.run(non_isolated, [&] (const vector<Vertex> & clique) {
                        if (right_open && is_clique_in_window(w, e + 1, clique))
                            return;
                        if (left_open && is_clique_in_window(w, s - 1, clique))
                            return;
                        vector<Vertex> sorted = clique;
                        std::sort(sorted.begin(), sorted.end());
                        result.push_back(make_pattern(PatternKind::Clique, std::move(sorted), s, e, delta, 0));
                    });
                }
            }
            return result;
        }

        /**
         * Generic engine for hereditary window conditions (plexes, defective
         * cliques). Walks every vertex set that is dense in at least one
         * window, adding vertices in increasing id order, and tracks the set
         * of windows where it is dense. Each maximal run of such windows is a
         * time-maximal pattern; it is reported when no outside vertex can
         * join for the whole run.
         */
        class HereditaryEnumerator
        {
            private:
                const WindowGraphs & _w;
                PatternKind _kind;
                size_t _k;
                TimeStep _delta;
                size_t _n;
                vector<DensePattern> & _out;

                vector<Vertex> _members;
                VertexSet _member_set;

                /// Windows of `dense` in which members + w stays dense; members must be dense there already.
                auto extend(const WindowSet & dense, Vertex w) const -> WindowSet
                {
                    WindowSet result(dense.capacity());
                    const size_t size = _members.size();
                    dense.for_each([&] (Vertex bit) {
                        TimeStep tau = TimeStep(bit) + 1;
                        auto & nw = _w.at(tau, w);
                        size_t misses = size - _member_set.intersection_count(nw);
                        if (misses > _k)
                            return;

                        if (_kind == PatternKind::Plex) {
                            for (auto x : _members)
                                if (! nw.test(x)) {
                                    size_t x_misses = size - 1 - _member_set.intersection_count(_w.at(tau, x));
                                    if (x_misses + 1 > _k)
                                        return;
                                }
                        }
                        else {
                            size_t twice_present = 0;
                            for (auto x : _members)
                                twice_present += _member_set.intersection_count(_w.at(tau, x));
                            size_t missing = size * (size - 1) / 2 - twice_present / 2;
                            if (missing + misses > _k)
                                return;
                        }
                        result.set(bit);
                    });
                    return result;
                }

                auto visit(const WindowSet & dense) -> void
                {
                    vector<WindowSet> joined(_n);
                    for (Vertex w = 0 ; w < _n ; ++w)
                        if (! _member_set.test(w))
                            joined[w] = extend(dense, w);

                    const TimeStep windows = _w.windows();
                    for (TimeStep tau = 1 ; tau <= windows ; ) {
                        if (! dense.test(tau - 1)) {
                            ++tau;
                            continue;
                        }
                        WindowSet run(dense.capacity());
                        TimeStep first = tau;
                        for ( ; tau <= windows && dense.test(tau - 1) ; ++tau)
                            run.set(tau - 1);

                        bool maximal = true;
                        for (Vertex w = 0 ; w < _n && maximal ; ++w)
                            if (! _member_set.test(w) && run.is_subset_of(joined[w]))
                                maximal = false;
                        if (maximal)
                            _out.push_back(make_pattern(_kind, _members, first, tau - 1, _delta, _k));
                    }

                    for (Vertex w = _members.back() + 1 ; w < _n ; ++w)
                        if (! joined[w].none()) {
                            _members.push_back(w);
                            _member_set.set(w);
                            visit(joined[w]);
                            _member_set.reset(w);
                            _members.pop_back();
                        }
                }

            public:
                HereditaryEnumerator(const WindowGraphs & w, PatternKind kind, size_t k, TimeStep delta, size_t n,
                        vector<DensePattern> & out) :
                    _w(w),
                    _kind(kind),
                    _k(k),
                    _delta(delta),
                    _n(n),
                    _out(out),
                    _member_set(n)
                {
                }

                auto run() -> void
                {
                    const TimeStep windows = _w.windows();
                    if (windows < 1)
                        return;
                    WindowSet all(windows);
                    for (TimeStep tau = 1 ; tau <= windows ; ++tau)
                        all.set(tau - 1);

                    for (Vertex v = 0 ; v < _n ; ++v) {
                        _members.assign(1, v);
                        _member_set.set(v);
                        visit(all);
                        _member_set.reset(v);
                    }
                }
        };

        auto finish(vector<DensePattern> patterns, size_t min_size) -> vector<DensePattern>
        {
            std::erase_if(patterns, [&] (const DensePattern & p) { return p.vertices.size() < min_size; });
            sort_canonically(patterns);
            return patterns;
        }

        auto check_delta(TimeStep delta) -> void
        {
            if (delta < 0)
                throw std::invalid_argument("delta must be non-negative");
        }
    }

    auto enumerate_maximal_cliques(const TemporalGraph & g, TimeStep delta, size_t min_size) -> vector<DensePattern>
    {
        check_delta(delta);
        return finish(cliques_by_window_runs(g, delta), min_size);
    }

    auto enumerate_maximal_plexes(const TemporalGraph & g, TimeStep delta, size_t k, size_t min_size)
        -> vector<DensePattern>
    {
        check_delta(delta);
        vector<DensePattern> result;
        WindowGraphs w(g, delta);
        HereditaryEnumerator(w, PatternKind::Plex, k, delta, g.size(), result).run();
        return finish(std::move(result), min_size);
    }

    auto enumerate_maximal_defective(const TemporalGraph & g, TimeStep delta, size_t k, size_t min_size)
        -> vector<DensePattern>
    {
        check_delta(delta);
        vector<DensePattern> result;
        WindowGraphs w(g, delta);
        HereditaryEnumerator(w, PatternKind::Defective, k, delta, g.size(), result).run();
        return finish(std::move(result), min_size);
    }

    auto enumerate_maximal(const TemporalGraph & g, PatternKind kind, TimeStep delta, size_t k, size_t min_size)
        -> vector<DensePattern>
    {
        switch (kind) {
            case PatternKind::Clique:    return enumerate_maximal_cliques(g, delta, min_size);
            case PatternKind::Plex:      return enumerate_maximal_plexes(g, delta, k, min_size);
            case PatternKind::Defective: return enumerate_maximal_defective(g, delta, k, min_size);
        }
        return {};
    }
}
