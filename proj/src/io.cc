#include <tclose/errors.hh>
#include <tclose/generate.hh>
#include <tclose/io.hh>
#include <tclose/oracle.hh>

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace tclose
{
    ParseError::ParseError(const string & message, size_t line) :
        std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        _line(line)
    {
    }

    namespace
    {
        auto split(const string & line) -> vector<string>
        {
            vector<string> tokens;
            string current;
            for (char ch : line) {
                if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
                    if (! current.empty())
                        tokens.push_back(std::move(current));
                    current.clear();
                }
                else
                    current.push_back(ch);
            }
            if (! current.empty())
                tokens.push_back(std::move(current));
            return tokens;
        }

        auto is_blank_or_comment(const string & line) -> bool
        {
            auto pos = line.find_first_not_of(" \t\r");
            return pos == string::npos || line[pos] == '#';
        }

        template <typename Int_>
        auto parse_int(const string & token) -> std::optional<Int_>
        {
            Int_ value{};
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || end != token.data() + token.size())
                return std::nullopt;
            return value;
        }
    }

    auto read_contacts(std::istream & in) -> vector<ContactRecord>
    {
        vector<ContactRecord> records;
        string line;
        size_t line_number = 0;
        bool seen_data = false;
        while (std::getline(in, line)) {
            ++line_number;
            if (is_blank_or_comment(line))
                continue;
            auto tokens = split(line);
            if (tokens.size() < 3)
                throw ParseError("expected 't u v', got " + std::to_string(tokens.size()) + " field(s)", line_number);

            auto t = parse_int<std::int64_t>(tokens[0]);
            if (! t) {
                if (! seen_data) {
                    seen_data = true;
                    continue;
                }
                throw ParseError("timestamp '" + tokens[0] + "' is not an integer", line_number);
            }
            seen_data = true;
            if (tokens[1] == tokens[2])
                throw ParseError("contact of '" + tokens[1] + "' with itself", line_number);
            records.push_back(ContactRecord{*t, tokens[1], tokens[2]});
        }
        if (records.empty())
            throw ParseError("no contact records");
        return records;
    }

    auto bin_contacts(const vector<ContactRecord> & records, std::int64_t bin_width) -> ContactGraph
    {
        if (bin_width < 1)
            throw std::invalid_argument("bin width must be at least 1");
        if (records.empty())
            throw ParseError("no contact records");

        std::set<string> label_set;
        std::int64_t t_min = records.front().timestamp;
        for (auto & r : records) {
            label_set.insert(r.u_label);
            label_set.insert(r.v_label);
            t_min = std::min(t_min, r.timestamp);
        }

        vector<string> labels(label_set.begin(), label_set.end());
        bool numeric = std::all_of(labels.begin(), labels.end(), [] (const string & s) {
                return parse_int<std::int64_t>(s).has_value(); });
        if (numeric)
            std::sort(labels.begin(), labels.end(), [] (const string & a, const string & b) {
                    return *parse_int<std::int64_t>(a) < *parse_int<std::int64_t>(b); });

        std::map<string, Vertex> id;
        for (size_t i = 0 ; i < labels.size() ; ++i)
            id.emplace(labels[i], Vertex(i));

        std::map<std::pair<Vertex, Vertex>, vector<TimeStep>> steps;
        for (auto & r : records) {
            Vertex u = id.at(r.u_label), v = id.at(r.v_label);
            if (u > v)
                std::swap(u, v);
            steps[{u, v}].push_back((r.timestamp - t_min) / bin_width + 1);
        }

        vector<TemporalEdge> edges;
        for (auto & [uv, s] : steps)
            edges.push_back(TemporalEdge{uv.first, uv.second, std::move(s)});

        return ContactGraph{TemporalGraph(labels.size(), std::move(edges)), std::move(labels), t_min, bin_width};
    }

    auto parse_contacts(std::istream & in, std::int64_t bin_width) -> ContactGraph
    {
        if (bin_width < 1)
            throw std::invalid_argument("bin width must be at least 1");
        return bin_contacts(read_contacts(in), bin_width);
    }

    auto parse_native(std::istream & in) -> TemporalGraph
    {
        string line;
        size_t line_number = 0;
        std::optional<std::pair<size_t, TimeStep>> header;
        vector<TemporalEdge> edges;
        std::set<std::pair<Vertex, Vertex>> seen;

        while (std::getline(in, line)) {
            ++line_number;
            if (is_blank_or_comment(line))
                continue;
            auto tokens = split(line);

            if (! header) {
                if (tokens.size() != 2)
                    throw ParseError("header must be 'n lifetime'", line_number);
                auto n = parse_int<size_t>(tokens[0]);
                auto lifetime = parse_int<TimeStep>(tokens[1]);
                if (! n || ! lifetime || *lifetime < 1)
                    throw ParseError("header must be 'n lifetime' with lifetime >= 1", line_number);
                header = {*n, *lifetime};
                continue;
            }

            if (tokens.size() < 3)
                throw ParseError("edge line must be 'u v t1 t2 ...'", line_number);
            auto u = parse_int<Vertex>(tokens[0]), v = parse_int<Vertex>(tokens[1]);
            if (! u || ! v || *u >= header->first || *v >= header->first)
                throw ParseError("vertex id out of range", line_number);
            if (*u == *v)
                throw ParseError("self-loop", line_number);
            auto key = std::minmax(*u, *v);
            if (! seen.insert(key).second)
                throw ParseError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second),
                        line_number);

            TemporalEdge e{*u, *v, {}};
            for (size_t i = 2 ; i < tokens.size() ; ++i) {
                auto t = parse_int<TimeStep>(tokens[i]);
                if (! t || *t < 1 || *t > header->second)
                    throw ParseError("time-step '" + tokens[i] + "' outside [1, " + std::to_string(header->second) + "]",
                            line_number);
                if (! e.steps.empty() && *t <= e.steps.back())
                    throw ParseError("time-steps must be strictly increasing", line_number);
                e.steps.push_back(*t);
            }
            edges.push_back(std::move(e));
        }

        if (! header)
            throw ParseError("missing header");
        TemporalGraph g(header->first, std::move(edges));
        if (g.lifetime() != header->second)
            throw ParseError("header lifetime " + std::to_string(header->second) + " does not match the largest step "
                    + std::to_string(g.lifetime()));
        return g;
    }

    auto write_native(std::ostream & out, const TemporalGraph & g) -> void
    {
        out << g.size() << ' ' << g.lifetime() << '\n';
        for (auto & e : g.edges()) {
            out << e.u << ' ' << e.v;
            for (auto t : e.steps)
                out << ' ' << t;
            out << '\n';
        }
    }

    auto looks_native(const string & text) -> bool
    {
        std::istringstream in(text);
        string line;
        while (std::getline(in, line)) {
            if (is_blank_or_comment(line))
                continue;
            auto tokens = split(line);
            return tokens.size() == 2 && parse_int<std::int64_t>(tokens[0]) && parse_int<std::int64_t>(tokens[1]);
        }
        return false;
    }

    auto write_patterns(std::ostream & out, const vector<DensePattern> & patterns, const vector<string> * labels) -> void
    {
        for (auto & p : patterns) {
            out << to_string(p.kind) << ' ' << p.window.start << ' ' << p.window.end << ' ';
            for (size_t i = 0 ; i < p.vertices.size() ; ++i) {
                if (i > 0)
                    out << ',';
                if (labels)
                    out << (*labels)[p.vertices[i]];
                else
                    out << p.vertices[i];
            }
            out << '\n';
        }
    }

    auto write_ordering_csv(std::ostream & out, const OrderingResult & ordering, const vector<string> * labels) -> void
    {
        out << "position,vertex,value\n";
        for (size_t i = 0 ; i < ordering.order.size() ; ++i) {
            out << i + 1 << ',';
            if (labels)
                out << (*labels)[ordering.order[i]];
            else
                out << ordering.order[i];
            out << ',' << ordering.per_step_value[i] << '\n';
        }
    }

    auto write_curve_csv(std::ostream & out, const ClosureRateCurve & curve) -> void
    {
        out << "x,support,rate\n";
        for (auto & point : curve.points) {
            std::ostringstream rate;
            rate.precision(6);
            rate << std::fixed << point.rate;
            out << point.x << ',' << point.support << ',' << rate.str() << '\n';
        }
    }

    auto write_bound_checks_csv(std::ostream & out, const vector<BoundCheck> & checks) -> void
    {
        out << "theorem,kind,instability,observed,bound,c_or_gamma,eta,d0,d1,d2,delta,k,n,lifetime,satisfied\n";
        for (auto & c : checks) {
            auto & p = c.params;
            out << c.theorem << ',' << to_string(c.kind) << ',' << c.instability << ',' << c.observed_count << ','
                << c.bound_value << ',' << p.c_or_gamma << ',' << p.eta << ',' << p.closure.d0 << ',' << p.closure.d1 << ','
                << p.closure.d2 << ',' << p.delta << ',' << p.k << ',' << p.n << ',' << p.lifetime << ','
                << (c.satisfied ? "true" : "false") << '\n';
        }
    }

    auto default_stats_configs() -> vector<ClosureParams>
    {
        return {
            ClosureParams{0, 0, 0},
            ClosureParams{10, 0, 10},
            ClosureParams{0, 5, 0},
            ClosureParams{10, 5, 10}
        };
    }

    auto compute_stats(const string & instance, const TemporalGraph & g, const vector<ClosureParams> & configs,
            PairwiseMode mode) -> StatsRow
    {
        StatsRow row;
        row.instance = instance;
        row.vertices = g.size();
        row.edges = g.edge_count();
        row.lifetime = g.lifetime();
        if (g.size() > 0) {
            row.degree_min = g.degree(0);
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                row.degree_max = std::max(row.degree_max, g.degree(v));
                row.degree_min = std::min(row.degree_min, g.degree(v));
            }
        }

        auto lifted = gen_static_lift(g.footprint(), 1);
        row.static_c = closure_number(lifted, ClosureParams{});
        row.static_gamma = weak_closure_number(lifted, ClosureParams{}).value + 1;

        for (auto & p : configs)
            row.per_config.push_back(StatsRow::PerConfig{p, closure_number(g, p),
                    weak_closure_number(g, p).value + 1,
                    weak_pairwise_instability(g, p.d1, mode).value,
                    combined_weak_value(g, p, mode).value});

        row.local_eta = local_instability(g);
        for (auto & p : configs)
            if (std::none_of(row.pairwise_eta.begin(), row.pairwise_eta.end(), [&] (auto & e) { return e.first == p.d1; }))
                row.pairwise_eta.emplace_back(p.d1, pairwise_instability(g, p.d1, mode));
        return row;
    }

    auto write_stats_csv(std::ostream & out, const vector<StatsRow> & rows) -> void
    {
        if (rows.empty())
            return;

        auto tag = [] (const ClosureParams & p) {
            return "d1=" + std::to_string(p.d1) + "_d0=" + std::to_string(p.d0) + "_d2=" + std::to_string(p.d2);
        };

        auto & first = rows.front();
        out << "instance,vertices,edges,lifetime,degree_max,degree_min,static_c,static_gamma";
        for (auto & pc : first.per_config)
            out << ",c_" << tag(pc.params) << ",gamma_" << tag(pc.params);
        out << ",local_eta";
        for (auto & [d1, _] : first.pairwise_eta)
            out << ",pairwise_eta_d1=" << d1;
        for (auto & pc : first.per_config)
            out << ",weak_gamma_" << tag(pc.params) << ",weak_eta_" << tag(pc.params) << ",b_" << tag(pc.params);
        out << '\n';

        for (auto & row : rows) {
            out << row.instance << ',' << row.vertices << ',' << row.edges << ',' << row.lifetime << ','
                << row.degree_max << ',' << row.degree_min << ',' << row.static_c << ',' << row.static_gamma;
            for (auto & pc : row.per_config)
                out << ',' << pc.c << ',' << pc.gamma;
            out << ',' << row.local_eta;
            for (auto & [_, eta] : row.pairwise_eta)
                out << ',' << eta;
            for (auto & pc : row.per_config)
                out << ',' << pc.gamma << ',' << pc.weak_pairwise_eta << ',' << pc.combined_b;
            out << '\n';
        }
    }
}
