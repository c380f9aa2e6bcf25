#include <tclose/temporal_graph.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::pair;
using std::size_t;
using std::to_string;
using std::vector;

namespace tclose
{
    auto Interval::checked(TimeStep start, TimeStep end) -> Interval
    {
        if (start < 1 || start > end)
            throw std::invalid_argument("invalid interval [" + to_string(start) + ", " + to_string(end) + "]");
        return Interval{start, end};
    }

    StaticGraph::StaticGraph(size_t n) :
        _adj(n)
    {
    }

    StaticGraph::StaticGraph(size_t n, const vector<pair<Vertex, Vertex>> & edges) :
        _adj(n)
    {
        for (auto & [u, v] : edges)
            add_edge(u, v);
    }

    auto StaticGraph::add_edge(Vertex u, Vertex v) -> void
    {
        if (u >= _adj.size() || v >= _adj.size())
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + to_string(u));

        auto insert = [] (vector<Vertex> & list, Vertex x) {
            auto it = std::lower_bound(list.begin(), list.end(), x);
            if (it == list.end() || *it != x)
                list.insert(it, x);
        };
        insert(_adj[u], v);
        insert(_adj[v], u);
    }

    auto StaticGraph::has_edge(Vertex u, Vertex v) const -> bool
    {
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto StaticGraph::edge_count() const -> size_t
    {
        size_t twice = 0;
        for (auto & list : _adj)
            twice += list.size();
        return twice / 2;
    }

    auto StaticGraph::edges() const -> vector<pair<Vertex, Vertex>>
    {
        vector<pair<Vertex, Vertex>> result;
        for (Vertex u = 0 ; u < _adj.size() ; ++u)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    TemporalGraph::TemporalGraph(size_t n, vector<TemporalEdge> edges) :
        _n(n),
        _adj(n)
    {
        for (auto & e : edges) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("edge endpoint out of range for n = " + to_string(n));
            if (e.u == e.v)
                throw std::invalid_argument("self-loop on vertex " + to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.steps.empty())
                throw std::invalid_argument("edge " + to_string(e.u) + "-" + to_string(e.v) + " has no active steps");
            std::sort(e.steps.begin(), e.steps.end());
            e.steps.erase(std::unique(e.steps.begin(), e.steps.end()), e.steps.end());
            if (e.steps.front() < 1)
                throw std::invalid_argument("time-steps start at 1");
        }

        std::sort(edges.begin(), edges.end(), [] (const TemporalEdge & a, const TemporalEdge & b) {
                return pair{a.u, a.v} < pair{b.u, b.v}; });
        for (size_t i = 1 ; i < edges.size() ; ++i)
            if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
                throw std::invalid_argument("duplicate edge " + to_string(edges[i].u) + "-" + to_string(edges[i].v));

        _edges = std::move(edges);
        for (size_t i = 0 ; i < _edges.size() ; ++i) {
            _adj[_edges[i].u].emplace_back(_edges[i].v, i);
            _adj[_edges[i].v].emplace_back(_edges[i].u, i);
            _lifetime = std::max(_lifetime, _edges[i].steps.back());
        }
        for (auto & list : _adj)
            std::sort(list.begin(), list.end());
    }

    auto TemporalGraph::steps(Vertex u, Vertex v) const -> std::span<const TimeStep>
    {
        if (u >= _n || v >= _n)
            throw std::out_of_range("vertex id out of range");
        auto & list = _adj[u];
        auto it = std::lower_bound(list.begin(), list.end(), v, [] (const pair<Vertex, size_t> & p, Vertex x) {
                return p.first < x; });
        if (it == list.end() || it->first != v)
            return {};
        return _edges[it->second].steps;
    }

    auto TemporalGraph::active_during(Vertex u, Vertex v, const Interval & i) const -> bool
    {
        auto s = steps(u, v);
        auto it = std::lower_bound(s.begin(), s.end(), i.start);
        return it != s.end() && *it <= i.end;
    }

    auto TemporalGraph::footprint_neighbors(Vertex v) const -> vector<Vertex>
    {
        if (v >= _n)
            throw std::out_of_range("vertex id out of range");
        vector<Vertex> result;
        for (auto & [w, _] : _adj[v])
            result.push_back(w);
        return result;
    }

    auto TemporalGraph::footprint() const -> StaticGraph
    {
        StaticGraph result(_n);
        for (auto & e : _edges)
            result.add_edge(e.u, e.v);
        return result;
    }

    auto graph_in_interval(const TemporalGraph & g, const Interval & i) -> StaticGraph
    {
        StaticGraph result(g.size());
        for (auto & e : g.edges())
            if (g.active_during(e.u, e.v, i))
                result.add_edge(e.u, e.v);
        return result;
    }

    auto neighbors_in_interval(const TemporalGraph & g, Vertex v, const Interval & i) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto w : g.footprint_neighbors(v))
            if (g.active_during(v, w, i))
                result.push_back(w);
        return result;
    }

    auto common_neighbors(const TemporalGraph & g, Vertex u, Vertex v, const Interval & i) -> vector<Vertex>
    {
        if (u == v)
            throw std::invalid_argument("common_neighbors needs two distinct vertices");
        auto nu = neighbors_in_interval(g, u, i);
        auto nv = neighbors_in_interval(g, v, i);
        vector<Vertex> result;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(result));
        return result;
    }

    auto induced_subgraph(const TemporalGraph & g, const vector<Vertex> & s) -> Subgraph
    {
        vector<Vertex> keep = s;
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        if (! keep.empty() && keep.back() >= g.size())
            throw std::out_of_range("vertex id out of range");

        vector<long> new_id(g.size(), -1);
        for (size_t i = 0 ; i < keep.size() ; ++i)
            new_id[keep[i]] = static_cast<long>(i);

        vector<TemporalEdge> edges;
        for (auto & e : g.edges())
            if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
                edges.push_back(TemporalEdge{Vertex(new_id[e.u]), Vertex(new_id[e.v]), e.steps});

        return Subgraph{TemporalGraph(keep.size(), std::move(edges)), std::move(keep)};
    }

    auto remove_vertex(const TemporalGraph & g, Vertex v) -> Subgraph
    {
        if (v >= g.size())
            throw std::out_of_range("vertex id out of range");
        vector<Vertex> rest;
        for (Vertex w = 0 ; w < g.size() ; ++w)
            if (w != v)
                rest.push_back(w);
        return induced_subgraph(g, rest);
    }

    SnapshotIndex::SnapshotIndex(const TemporalGraph & g) :
        _n(g.size()),
        _lifetime(g.lifetime()),
        _nbrs(static_cast<size_t>(g.lifetime()) * g.size(), VertexSet(g.size()))
    {
        for (auto & e : g.edges())
            for (auto t : e.steps) {
                _nbrs[(t - 1) * _n + e.u].set(e.v);
                _nbrs[(t - 1) * _n + e.v].set(e.u);
            }
    }

    auto SnapshotIndex::accumulate(Vertex v, TimeStep from, TimeStep to, VertexSet & out) const -> void
    {
        from = std::max<TimeStep>(from, 1);
        to = std::min(to, _lifetime);
        for (TimeStep t = from ; t <= to ; ++t)
            out |= at(v, t);
    }
}
