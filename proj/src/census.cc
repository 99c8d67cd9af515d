#include <ordmotif/motif.hh>

#include <stdexcept>

using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    auto MotifCensus::of(ScaleFamily f) const -> const FamilyCensus &
    {
        for (auto & c : families)
            if (c.family == f)
                return c;
        throw std::logic_error("family missing from census");
    }

    auto MotifCensus::largest_motif(ScaleFamily f) const -> const Motif *
    {
        const Motif * best = nullptr;
        for (auto & m : of(f).motifs)
            if (! best || m.domain.size() > best->domain.size())
                best = &m;
        return best;
    }

    auto census(const FormalContext & k, const CensusOptions & options) -> MotifCensus
    {
        MotifCensus out;
        for (size_t i = 0; i < all_families.size(); ++i) {
            auto family = all_families[i];
            auto & entry = out.families[i];
            entry.family = family;
            auto motifs = family == ScaleFamily::Crown ? enumerate_crown_motifs(k, std::max<size_t>(options.min_size[i], 3), options.search)
                                                       : enumerate_motifs(k, family, options.min_size[i], options.search);

            auto maximal = maximal_motifs(motifs);
            entry.local_full = motifs.size();
            entry.maximal = maximal.size();
            // flag the maximal ones in the full listing; both lists are sorted
            // the same way
            size_t j = 0;
            for (auto & m : motifs) {
                entry.largest = std::max(entry.largest, m.domain.size());
                if (j < maximal.size() && maximal[j].domain == m.domain) {
                    m.maximal = true;
                    ++j;
                }
            }
            entry.motifs = std::move(motifs);
        }
        return out;
    }

    namespace
    {
        auto block_label(const FormalContext & k, const ObjectSet & block) -> string
        {
            if (block.size() == 1)
                return k.object(block.first());
            return format_objects(k, block);
        }

        auto enumerate_labels(const vector<string> & labels) -> string
        {
            string out;
            for (size_t i = 0; i < labels.size(); ++i) {
                if (i > 0)
                    out += i + 1 == labels.size() ? " and " : ", ";
                out += labels[i];
            }
            return out;
        }
    }

    auto basic_meaning(const FormalContext & k, const Motif & motif) -> string
    {
        vector<string> labels;
        for (size_t t = 0; t < motif.arity; ++t)
            labels.push_back(block_label(k, motif.map.preimage(ObjectSet::of(motif.arity, {t}))));
        auto subjects = enumerate_labels(labels);

        switch (motif.family) {
        case ScaleFamily::Nominal: return subjects + " form a partition.";
        case ScaleFamily::Ordinal: return subjects + " form a rank order.";
        case ScaleFamily::Interordinal: return subjects + " form a linear betweenness relation.";
        case ScaleFamily::Contranominal: return subjects + " form a partition and are independent.";
        case ScaleFamily::Crown: return subjects + " form a crown; there is no standard basic meaning for crowns.";
        }
        throw std::logic_error("unknown scale family");
    }
}
