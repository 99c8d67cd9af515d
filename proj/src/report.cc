#include <ordmotif/io.hh>

#include <algorithm>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    namespace
    {
        const char * const row_names[] = {"local full sm", "maximal lf-sm", "largest lf-sm"};

        auto row_value(const FamilyCensus & c, size_t row) -> size_t
        {
            switch (row) {
            case 0: return c.local_full;
            case 1: return c.maximal;
            default: return c.largest;
            }
        }

        auto html_escape(const string & s) -> string
        {
            string out;
            for (char c : s) {
                switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                default: out += c;
                }
            }
            return out;
        }
    }

    auto render_report(const FormalContext & k, const MotifCensus & census) -> ReportDocument
    {
        std::ostringstream tsv, md;

        for (auto f : all_families)
            tsv << '\t' << family_name(f);
        tsv << '\n';
        for (size_t row = 0; row < 3; ++row) {
            tsv << row_names[row];
            for (auto & c : census.families)
                tsv << '\t' << row_value(c, row);
            tsv << '\n';
        }

        md << "# Ordinal motif census\n\n|";
        for (auto f : all_families)
            md << " | " << family_name(f);
        md << " |\n|---";
        for (size_t i = 0; i < all_families.size(); ++i)
            md << "|---:";
        md << "|\n";
        for (size_t row = 0; row < 3; ++row) {
            md << "| " << row_names[row];
            for (auto & c : census.families)
                md << " | " << row_value(c, row);
            md << " |\n";
        }

        md << "\n## Largest motifs\n";
        for (auto f : all_families) {
            md << "\n### " << family_name(f) << "\n\n";
            auto motif = census.largest_motif(f);
            if (! motif) {
                md << "No motif found.\n";
                continue;
            }
            md << "Size " << motif->domain.size() << ", arity " << motif->arity << ": "
               << format_objects(k, motif->domain) << "\n\n"
               << basic_meaning(k, *motif) << "\n";
        }

        return ReportDocument{md.str(), tsv.str()};
    }

    auto export_dot(const FormalContext & k, const std::optional<ObjectSet> & highlight) -> string
    {
        auto extents = all_extents(k);
        auto & sets = extents.sets();
        auto n = sets.size();

        // node of each object concept
        vector<vector<size_t>> introduced(n);
        for (size_t g = 0; g < k.object_count(); ++g) {
            auto closed = extent_closure(k, ObjectSet::of(k.object_count(), {g}));
            auto pos = std::find(sets.begin(), sets.end(), closed) - sets.begin();
            introduced[pos].push_back(g);
        }

        std::ostringstream out;
        out << "digraph extents {\n  rankdir=BT;\n  node [shape=box];\n";
        for (size_t i = 0; i < n; ++i) {
            out << "  n" << i << " [label=";
            if (introduced[i].empty())
                out << "\"\"";
            else {
                out << '<';
                for (size_t j = 0; j < introduced[i].size(); ++j) {
                    auto g = introduced[i][j];
                    if (j > 0)
                        out << ", ";
                    bool bold = highlight && highlight->contains(g);
                    out << (bold ? "<B>" : "") << html_escape(k.object(g)) << (bold ? "</B>" : "");
                }
                out << '>';
            }
            out << "];\n";
        }

        // a covers b when nothing lies strictly between them
        for (size_t lower = 0; lower < n; ++lower)
            for (size_t upper = 0; upper < n; ++upper) {
                if (! sets[lower].is_proper_subset_of(sets[upper]))
                    continue;
                bool cover = true;
                for (size_t mid = 0; mid < n && cover; ++mid)
                    if (sets[lower].is_proper_subset_of(sets[mid]) && sets[mid].is_proper_subset_of(sets[upper]))
                        cover = false;
                if (cover)
                    out << "  n" << lower << " -> n" << upper << ";\n";
            }
        out << "}\n";
        return out.str();
    }
}
