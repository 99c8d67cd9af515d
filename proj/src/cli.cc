#include <ordmotif/cli.hh>
#include <ordmotif/io.hh>
#include <ordmotif/measure.hh>
#include <ordmotif/motif.hh>
#include <ordmotif/reductions.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    namespace
    {
        /// Thrown for bad option values that CLI11 does not see.
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto threads_from_environment() -> size_t
        {
            auto value = std::getenv("ORDMOTIF_THREADS");
            if (! value || ! *value)
                return 0;
            string text = value;
            size_t n = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw UsageError("ORDMOTIF_THREADS must be a non-negative integer");
            return n;
        }

        auto yes_no(bool b) -> const char *
        {
            return b ? "yes" : "no";
        }

        auto empty_extent_option(const string & name) -> EmptyExtent
        {
            auto mode = parse_empty_extent(name);
            if (! mode)
                throw UsageError("--empty-extent must be lenient or strict");
            return *mode;
        }

        auto describe_motif(const FormalContext & k, const Motif & m) -> string
        {
            string out = std::to_string(m.domain.size()) + "\t" + std::to_string(m.arity) + "\t" + format_objects(k, m.domain) + "\t";
            bool first = true;
            m.domain.for_each([&](size_t g) {
                if (! first)
                    out += ", ";
                first = false;
                out += k.object(g) + "->" + std::to_string(m.map(g) + 1);
            });
            return out;
        }

        auto split_labels(const string & text) -> vector<string>
        {
            vector<string> out;
            size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find(',', start);
                if (end == string::npos)
                    end = text.size();
                out.push_back(text.substr(start, end - start));
                start = end + 1;
            }
            return out;
        }
    }

    auto cli_main(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Ordinal motifs in formal contexts", "ordmotif"};
        app.require_subcommand(1);

        string file, scale_file, map_file, family_name_arg, empty_extent = "lenient", format = "md", mode, highlight;
        size_t min_size = 0;
        bool maximal_only = false, use_dual = false;

        auto extents_cmd = app.add_subcommand("extents", "list all extents in lectic order");
        extents_cmd->add_option("file", file, "context (.cxt or .csv)")->required();

        auto dual_cmd = app.add_subcommand("dual", "write the dual context as .cxt");
        dual_cmd->add_option("file", file, "context (.cxt or .csv)")->required();

        auto verify_cmd = app.add_subcommand("verify", "check a map for being a (full) scale-measure");
        verify_cmd->add_option("context", file, "source context")->required();
        verify_cmd->add_option("scale", scale_file, "scale context")->required();
        verify_cmd->add_option("--map", map_file, "JSON file {\"map\": {object: scale object}}")->required();

        auto find_cmd = app.add_subcommand("find", "list motifs of one scale family");
        find_cmd->add_option("file", file, "context (.cxt or .csv)")->required();
        find_cmd->add_option("--family", family_name_arg, "nominal, ordinal, interordinal, contranominal or crown")->required();
        find_cmd->add_option("--min-size", min_size, "smallest domain size");
        find_cmd->add_option("--empty-extent", empty_extent, "lenient or strict");
        find_cmd->add_flag("--maximal", maximal_only, "only maximal domains");

        auto report_cmd = app.add_subcommand("report", "motif census for all families");
        report_cmd->add_option("file", file, "context (.cxt or .csv)")->required();
        report_cmd->add_flag("--dual", use_dual, "run on the dual context");
        report_cmd->add_option("--min-size", min_size, "smallest domain size");
        report_cmd->add_option("--empty-extent", empty_extent, "lenient or strict");
        report_cmd->add_option("--format", format, "md or tsv")->check(CLI::IsMember({"md", "tsv"}));

        auto reduce_cmd = app.add_subcommand("reduce", "graph to context reduction");
        reduce_cmd->add_option("graph", file, "edge list: vertex count, then \"u v\" lines")->required();
        reduce_cmd->add_option("--mode", mode, "si or isi")->required()->check(CLI::IsMember({"si", "isi"}));

        auto dot_cmd = app.add_subcommand("dot", "extent lattice as a DOT digraph");
        dot_cmd->add_option("file", file, "context (.cxt or .csv)")->required();
        dot_cmd->add_option("--highlight", highlight, "comma separated object labels to set in bold");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return e.get_exit_code() == 0 ? 0 : 2;
        }

        try {
            SearchOptions search{EmptyExtent::Lenient, threads_from_environment()};

            if (extents_cmd->parsed()) {
                auto k = read_context_file(file);
                for (auto & e : all_extents(k))
                    out << format_objects(k, e) << '\n';
                return 0;
            }

            if (dual_cmd->parsed()) {
                out << write_cxt(dual(read_context_file(file)));
                return 0;
            }

            if (verify_cmd->parsed()) {
                auto k = read_context_file(file);
                auto s = read_context_file(scale_file);
                auto sigma = parse_map_json(read_text_file(map_file), k, s);
                auto verdict = sigma.is_total() ? is_full_scale_measure(k, s, sigma) : is_local_scale_measure(k, s, sigma, true);
                if (! sigma.is_total())
                    out << "domain: " << format_objects(k, sigma.domain()) << '\n';
                out << "scale-measure: " << yes_no(verdict.is_scale_measure) << '\n'
                    << "full scale-measure: " << yes_no(verdict.is_full) << '\n'
                    << "surjective: " << yes_no(verdict.is_surjective) << '\n';
                if (verdict.witness)
                    out << "witness: " << format_objects(k, *verdict.witness) << '\n';
                return verdict.is_scale_measure ? 0 : 1;
            }

            if (find_cmd->parsed()) {
                auto family = parse_family(family_name_arg);
                if (! family)
                    throw UsageError("unknown family '" + family_name_arg + "'");
                search.empty_extent = empty_extent_option(empty_extent);
                auto k = read_context_file(file);
                auto floor = std::max(min_size, min_arity(*family));
                auto motifs = *family == ScaleFamily::Crown ? enumerate_crown_motifs(k, floor, search)
                                                            : enumerate_motifs(k, *family, floor, search);
                if (maximal_only)
                    motifs = maximal_motifs(std::move(motifs));
                for (auto & m : motifs)
                    out << describe_motif(k, m) << '\n';
                return motifs.empty() ? 1 : 0;
            }

            if (report_cmd->parsed()) {
                auto k = read_context_file(file);
                if (use_dual)
                    k = dual(k);
                CensusOptions options;
                search.empty_extent = empty_extent_option(empty_extent);
                options.search = search;
                if (min_size > 0)
                    for (size_t i = 0; i < all_families.size(); ++i)
                        options.min_size[i] = std::max(min_size, min_arity(all_families[i]));
                auto doc = render_report(k, census(k, options));
                out << (format == "tsv" ? doc.tsv : doc.markdown);
                return 0;
            }

            if (reduce_cmd->parsed()) {
                auto g = parse_graph(read_text_file(file));
                out << write_cxt(mode == "si" ? reduce_si(g) : reduce_isi(g));
                return 0;
            }

            if (dot_cmd->parsed()) {
                auto k = read_context_file(file);
                std::optional<ObjectSet> marked;
                if (! highlight.empty()) {
                    marked = k.no_objects();
                    for (auto & label : split_labels(highlight)) {
                        auto g = k.find_object(label);
                        if (g == FormalContext::npos)
                            throw UsageError("unknown object '" + label + "'");
                        marked->insert(g);
                    }
                }
                out << export_dot(k, marked);
                return 0;
            }
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }

        return 2;
    }
}
