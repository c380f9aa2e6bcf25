#include <tclose/bounds.hh>
#include <tclose/cli.hh>
#include <tclose/closure.hh>
#include <tclose/enumerate.hh>
#include <tclose/errors.hh>
#include <tclose/generate.hh>
#include <tclose/instability.hh>
#include <tclose/io.hh>
#include <tclose/oracle.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace tclose
{
    namespace
    {
        struct InputOptions
        {
            string path = "-";
            string format = "auto";
            std::int64_t bin = 3600;
        };

        struct LoadedInput
        {
            TemporalGraph graph;
            std::optional<vector<string>> labels;
            string name;

            auto label_ptr() const -> const vector<string> *
            {
                return labels ? &*labels : nullptr;
            }
        };

        auto add_input_options(CLI::App * sub, InputOptions & opts) -> void
        {
            sub->add_option("file", opts.path, "input file, '-' for stdin")->capture_default_str();
            sub->add_option("--format", opts.format, "auto, native or contacts")
                ->check(CLI::IsMember({"auto", "native", "contacts"}))->capture_default_str();
            sub->add_option("--bin", opts.bin, "contact-log bin width in seconds")
                ->check(CLI::PositiveNumber)->capture_default_str();
        }

        auto read_all(const string & path, std::istream & in) -> string
        {
            if (path == "-")
                return string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            std::ifstream file(path, std::ios::binary);
            if (! file)
                throw ParseError("cannot open '" + path + "'");
            return string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }

        auto load(const InputOptions & opts, std::istream & in) -> LoadedInput
        {
            string text = read_all(opts.path, in);
            string name = opts.path == "-" ? "stdin" : std::filesystem::path(opts.path).stem().string();
            bool native = opts.format == "native" || (opts.format == "auto" && looks_native(text));
            std::istringstream stream(text);
            if (native)
                return LoadedInput{parse_native(stream), std::nullopt, name};
            auto contacts = parse_contacts(stream, opts.bin);
            return LoadedInput{std::move(contacts.graph), std::move(contacts.labels), name};
        }

        auto parse_config(const string & text) -> ClosureParams
        {
            std::istringstream in(text);
            ClosureParams p;
            char c1 = 0, c2 = 0;
            if (! (in >> p.d0 >> c1 >> p.d1 >> c2 >> p.d2) || c1 != ',' || c2 != ',' || ! (in >> std::ws).eof())
                throw CLI::ValidationError("--config", "expected d0,d1,d2 but got '" + text + "'");
            p.validate();
            return p;
        }

        auto pairwise_mode(bool all_intervals) -> PairwiseMode
        {
            return all_intervals ? PairwiseMode::AllIntervals : PairwiseMode::ExactLength;
        }

        auto add_closure_options(CLI::App * sub, ClosureParams & p, bool with_d1 = true) -> void
        {
            sub->add_option("--d0", p.d0, "left padding")->check(CLI::NonNegativeNumber)->capture_default_str();
            if (with_d1)
                sub->add_option("--d1", p.d1, "window length")->check(CLI::NonNegativeNumber)->capture_default_str();
            sub->add_option("--d2", p.d2, "right padding")->check(CLI::NonNegativeNumber)->capture_default_str();
        }

        auto print_ordering(std::ostream & out, const string & name, const OrderingResult & r,
                const vector<string> * labels) -> void
        {
            out << "# " << name << '=' << r.value << '\n';
            write_ordering_csv(out, r, labels);
        }
    }

    auto run_cli(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Temporal triadic closure parameters and dense pattern enumeration", "tclose"};
        app.require_subcommand(1);

        // stats
        InputOptions stats_in;
        vector<string> stats_files;
        vector<string> stats_configs;
        bool stats_all = false;
        auto stats = app.add_subcommand("stats", "per-instance statistics CSV");
        stats->add_option("files", stats_files, "input files, '-' for stdin");
        stats->add_option("--format", stats_in.format)->check(CLI::IsMember({"auto", "native", "contacts"}));
        stats->add_option("--bin", stats_in.bin, "contact-log bin width in seconds")
            ->check(CLI::PositiveNumber)->capture_default_str();
        stats->add_option("--config", stats_configs, "d0,d1,d2 (repeatable)");
        stats->add_flag("--all-intervals", stats_all, "pairwise instability over every base window");

        // closure
        InputOptions closure_in;
        ClosureParams closure_p;
        bool closure_weak = false;
        auto closure = app.add_subcommand("closure", "closure number or weak closure number");
        add_input_options(closure, closure_in);
        add_closure_options(closure, closure_p);
        closure->add_flag("--weak", closure_weak, "weak closure number and its elimination ordering");

        // instability
        InputOptions inst_in;
        ClosureParams inst_p;
        bool inst_local = false, inst_pairwise = false, inst_weak = false, inst_combined = false;
        bool inst_restricted = false, inst_all = false;
        auto inst = app.add_subcommand("instability", "local or pairwise instability");
        add_input_options(inst, inst_in);
        add_closure_options(inst, inst_p);
        auto group = inst->add_option_group("mode");
        group->add_flag("--local", inst_local);
        group->add_flag("--pairwise", inst_pairwise);
        group->add_flag("--weak-pairwise", inst_weak);
        group->add_flag("--combined", inst_combined);
        group->require_option(1);
        auto restricted_flag = inst->add_flag("--restricted", inst_restricted, "base windows of length exactly d1 (default)");
        inst->add_flag("--all-intervals", inst_all, "every base window, d1 ignored")->excludes(restricted_flag);

        // enumerate
        InputOptions enum_in;
        TimeStep enum_delta = 0;
        string enum_kind = "clique", enum_engine = "main";
        size_t enum_k = 0, enum_min = 1;
        auto enumerate = app.add_subcommand("enumerate", "maximal dense temporal patterns");
        add_input_options(enumerate, enum_in);
        enumerate->add_option("--delta", enum_delta)->required()->check(CLI::NonNegativeNumber);
        enumerate->add_option("--kind", enum_kind)->check(CLI::IsMember({"clique", "plex", "defective"}))
            ->capture_default_str();
        enumerate->add_option("--k", enum_k)->capture_default_str();
        enumerate->add_option("--min-size", enum_min)->capture_default_str();
        enumerate->add_option("--engine", enum_engine)->check(CLI::IsMember({"main", "oracle"}))->capture_default_str();

        // closure-rate
        InputOptions rate_in;
        ClosureParams rate_p;
        bool rate_exact = false;
        auto rate = app.add_subcommand("closure-rate", "closure rate against common-neighbour count");
        add_input_options(rate, rate_in);
        add_closure_options(rate, rate_p);
        rate->add_flag("--exact-x", rate_exact, "exactly x common neighbours instead of at least x");

        // generate
        GeneratorSpec gen_spec;
        string gen_out = "-";
        auto gen = app.add_subcommand("generate", "synthetic temporal graphs in native format");
        gen->add_option("--model", gen_spec.model)
            ->required()->check(CLI::IsMember({"example1", "moonmoser", "static-lift", "random-evolving"}));
        gen->add_option("--n,--parts", gen_spec.n, "vertices, or parts for moonmoser")->capture_default_str();
        gen->add_option("--delta", gen_spec.delta)->check(CLI::NonNegativeNumber)->capture_default_str();
        gen->add_option("--lifetime", gen_spec.lifetime)->check(CLI::PositiveNumber)->capture_default_str();
        gen->add_option("--p,--edge-probability", gen_spec.edge_probability)->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        gen->add_option("--flip-rate", gen_spec.flip_rate)->check(CLI::Range(0.0, 1.0))->capture_default_str();
        gen->add_option("--seed", gen_spec.seed)->capture_default_str();
        gen->add_option("--out", gen_out, "output file, '-' for stdout")->capture_default_str();

        // verify-bounds
        InputOptions vb_in;
        ClosureParams vb_p;
        TimeStep vb_delta = 0;
        size_t vb_k = 1;
        auto vb = app.add_subcommand("verify-bounds", "compare pattern counts with the theoretical bounds");
        add_input_options(vb, vb_in);
        add_closure_options(vb, vb_p);
        vb->add_option("--delta", vb_delta)->required()->check(CLI::NonNegativeNumber);
        vb->add_option("--k", vb_k)->capture_default_str();

        // oracle
        InputOptions or_in;
        ClosureParams or_p;
        TimeStep or_delta = 0;
        size_t or_k = 1;
        bool or_all = false;
        auto orc = app.add_subcommand("oracle", "cross-check the engines against brute force");
        add_input_options(orc, or_in);
        add_closure_options(orc, or_p);
        orc->add_option("--delta", or_delta)->check(CLI::NonNegativeNumber)->capture_default_str();
        orc->add_option("--k", or_k)->capture_default_str();
        orc->add_flag("--all-intervals", or_all);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return e.get_exit_code() == 0 ? exit_ok : exit_usage;
        }

        try {
            if (stats->parsed()) {
                vector<ClosureParams> configs;
                for (auto & c : stats_configs)
                    configs.push_back(parse_config(c));
                if (configs.empty())
                    configs = default_stats_configs();
                if (stats_files.empty())
                    stats_files.push_back("-");

                vector<StatsRow> rows;
                for (auto & f : stats_files) {
                    InputOptions o = stats_in;
                    o.path = f;
                    auto input = load(o, in);
                    rows.push_back(compute_stats(input.name, input.graph, configs, pairwise_mode(stats_all)));
                }
                write_stats_csv(out, rows);
            }
            else if (closure->parsed()) {
                auto input = load(closure_in, in);
                if (closure_weak)
                    print_ordering(out, "gamma", [&] {
                            auto r = weak_closure_number(input.graph, closure_p);
                            r.value += 1;
                            return r; }(), input.label_ptr());
                else
                    out << "c\n" << closure_number(input.graph, closure_p) << '\n';
            }
            else if (inst->parsed()) {
                auto input = load(inst_in, in);
                auto mode = pairwise_mode(inst_all);
                if (inst_local)
                    out << "local_eta\n" << local_instability(input.graph) << '\n';
                else if (inst_pairwise)
                    out << "pairwise_eta\n" << pairwise_instability(input.graph, inst_p.d1, mode) << '\n';
                else if (inst_weak)
                    print_ordering(out, "weak_pairwise_eta", weak_pairwise_instability(input.graph, inst_p.d1, mode),
                            input.label_ptr());
                else
                    print_ordering(out, "b", combined_weak_value(input.graph, inst_p, mode), input.label_ptr());
            }
            else if (enumerate->parsed()) {
                auto input = load(enum_in, in);
                auto kind = parse_pattern_kind(enum_kind);
                vector<DensePattern> patterns;
                if (enum_engine == "oracle") {
                    patterns = oracle::oracle_enumerate(input.graph, enum_delta, kind, enum_k);
                    std::erase_if(patterns, [&] (const DensePattern & p) { return p.vertices.size() < enum_min; });
                }
                else
                    patterns = enumerate_maximal(input.graph, kind, enum_delta, enum_k, enum_min);
                write_patterns(out, patterns, input.label_ptr());
            }
            else if (rate->parsed()) {
                auto input = load(rate_in, in);
                write_curve_csv(out, closure_rate_curve(input.graph, rate_p,
                            rate_exact ? RateMode::Exact : RateMode::Cumulative));
            }
            else if (gen->parsed()) {
                auto g = generate(gen_spec);
                if (gen_out == "-")
                    write_native(out, g);
                else {
                    std::ofstream file(gen_out);
                    if (! file) {
                        err << "error: cannot write '" << gen_out << "'\n";
                        return exit_usage;
                    }
                    write_native(file, g);
                }
            }
            else if (vb->parsed()) {
                // Checked before reading input so the violation is reported regardless of the file.
                vb_p.validate();
                if (vb_delta < vb_p.d0 + vb_p.d1 + vb_p.d2)
                    throw PreconditionError("delta >= d0 + d1 + d2 violated: " + std::to_string(vb_delta) + " < "
                            + std::to_string(vb_p.d0 + vb_p.d1 + vb_p.d2));
                auto input = load(vb_in, in);
                write_bound_checks_csv(out, verify_bounds(input.graph, vb_p, vb_delta, vb_k));
            }
            else if (orc->parsed()) {
                auto input = load(or_in, in);
                auto & g = input.graph;
                auto mode = pairwise_mode(or_all);
                out << "quantity,engine,oracle,match\n";
                auto row = [&] (const string & what, auto engine, auto reference) {
                    out << what << ',' << engine << ',' << reference << ',' << (engine == reference ? "true" : "false")
                        << '\n';
                };
                row("closure", closure_number(g, or_p), oracle::oracle_closure(g, or_p));
                row("local_eta", local_instability(g), oracle::oracle_local_eta(g));
                row("pairwise_eta", pairwise_instability(g, or_p.d1, mode), oracle::oracle_pairwise_eta(g, or_p.d1, mode));
                for (auto kind : {PatternKind::Clique, PatternKind::Plex, PatternKind::Defective}) {
                    auto engine = enumerate_maximal(g, kind, or_delta, or_k);
                    auto reference = oracle::oracle_enumerate(g, or_delta, kind, or_k);
                    sort_canonically(reference);
                    out << to_string(kind) << "_patterns," << engine.size() << ',' << reference.size() << ','
                        << (engine == reference ? "true" : "false") << '\n';
                }
                if (g.size() <= oracle::orderings_max_n)
                    row("gamma", weak_closure_number(g, or_p).value,
                            oracle::oracle_weak_orderings(g, or_p, oracle::OrderingMetric::Closure).value);
            }
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return exit_parse;
        }
        catch (const PreconditionError & e) {
            err << "precondition violated: " << e.what() << '\n';
            return exit_precondition;
        }
        catch (const SizeGuardError & e) {
            err << "size guard: " << e.what() << '\n';
            return exit_size_guard;
        }
        catch (const CLI::ValidationError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::invalid_argument & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::out_of_range & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_usage;
        }
        return exit_ok;
    }
}
