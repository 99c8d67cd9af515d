#pragma once

#include <ordmotif/context.hh>
#include <ordmotif/partial_map.hh>
#include <ordmotif/scales.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ordmotif
{
    /// How the empty set is treated when the extents of K[H, M] are matched
    /// against the extents of a scale.
    enum class EmptyExtent
    {
        /// The presence or absence of the empty set on either side is ignored.
        Lenient,
        /// Exact equality of the two closure systems.
        Strict
    };

    auto parse_empty_extent(std::string_view name) -> std::optional<EmptyExtent>;

    /// A domain H together with a surjective local full scale-measure from
    /// K[H, M] onto make_scale(family, arity).
    struct Motif
    {
        ScaleFamily family = ScaleFamily::Nominal;
        std::size_t arity = 0;
        ObjectSet domain;
        /// Defined exactly on `domain`; the lexicographically least valid map.
        PartialMap map;
        bool full = true;
        bool maximal = false;
    };

    struct SearchOptions
    {
        EmptyExtent empty_extent = EmptyExtent::Lenient;
        /// Worker threads for candidate testing; 0 picks the hardware count.
        std::size_t threads = 1;
    };

    /// A total surjective scale-measure from K onto S, or nullopt. The
    /// lexicographically least one is returned.
    auto exists_surjective_sm(const FormalContext & k, const FormalContext & s) -> std::optional<PartialMap>;

    /// A total full scale-measure from K into S, surjective unless
    /// `require_surjective` is false; nullopt if none exists.
    auto exists_full_sm(const FormalContext & k, const FormalContext & s, bool require_surjective = true)
        -> std::optional<PartialMap>;

    /// Decides whether H carries a motif of the family (for some arity) and
    /// returns it with its witnessing map. Domains are limited to 64 objects.
    auto match_domain(const FormalContext & k, const ObjectSet & h, ScaleFamily family, EmptyExtent mode)
        -> std::optional<Motif>;

    /// All motif domains of a hereditary family with at least `min_size`
    /// objects, grown levelwise: a domain is only tried once all of its
    /// one-smaller subsets have passed. Sorted by size, then by the sorted list
    /// of object indices. Throws std::logic_error for crowns.
    auto enumerate_motifs(const FormalContext & k, ScaleFamily family, std::size_t min_size, const SearchOptions & options = {})
        -> std::vector<Motif>;

    /// All crown motif domains with at least `min_size` objects. Throws
    /// ArityError when min_size < 3.
    auto enumerate_crown_motifs(const FormalContext & k, std::size_t min_size, const SearchOptions & options = {})
        -> std::vector<Motif>;

    /// Motifs whose domain is not strictly contained in another listed domain,
    /// with `maximal` set.
    auto maximal_motifs(std::vector<Motif> motifs) -> std::vector<Motif>;

    struct FamilyCensus
    {
        ScaleFamily family = ScaleFamily::Nominal;
        std::size_t local_full = 0;
        std::size_t maximal = 0;
        std::size_t largest = 0;
        /// Every motif found, maximal ones flagged.
        std::vector<Motif> motifs;
    };

    struct CensusOptions
    {
        /// Per family, in all_families order.
        std::array<std::size_t, 5> min_size{1, 1, 1, 1, 3};
        SearchOptions search;
    };

    struct MotifCensus
    {
        std::array<FamilyCensus, 5> families;

        auto of(ScaleFamily f) const -> const FamilyCensus &;
        /// First motif of maximum size, if any.
        auto largest_motif(ScaleFamily f) const -> const Motif *;
    };

    auto census(const FormalContext & k, const CensusOptions & options = {}) -> MotifCensus;

    /// The standard reading of a motif, naming its objects block by block in
    /// scale order.
    auto basic_meaning(const FormalContext & k, const Motif & motif) -> std::string;
}
