#pragma once

#include <ordmotif/motif.hh>

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ordmotif::detail
{
    using ClassMask = std::uint64_t;

    /// The closure system of K[H, M] seen on the classes of indistinguishable
    /// objects of H. Class i is the i-th distinct object row met when walking H
    /// in index order.
    struct DomainView
    {
        std::vector<std::size_t> members;
        std::vector<std::size_t> class_of;
        std::size_t class_count = 0;
        /// Sorted; always contains the full class mask.
        std::vector<ClassMask> closed;
    };

    /// Closed-set count of the family's scale of arity k, or nullopt when the
    /// family admits no scale of that arity.
    auto scale_extent_count(ScaleFamily family, std::size_t k) -> std::optional<std::size_t>;

    /// For each class the scale object it maps to, choosing the
    /// lexicographically least assignment; nullopt if the view does not match.
    auto match_classes(const DomainView & view, ScaleFamily family, EmptyExtent mode)
        -> std::optional<std::vector<std::size_t>>;

    class DomainMatcher
    {
    public:
        explicit DomainMatcher(const FormalContext & k);

        auto context() const -> const FormalContext & { return _k; }
        auto row_id(std::size_t g) const -> std::size_t { return _row_id[g]; }
        auto row_count() const -> std::size_t { return _row_count; }

        /// Builds the view of H; gives up with nullopt as soon as more than
        /// `bound` closed sets appear. `members` must be sorted.
        auto view(const std::vector<std::size_t> & members, std::size_t bound) const -> std::optional<DomainView>;

        /// View bounded by what `family` can possibly match.
        auto view_for(const std::vector<std::size_t> & members, ScaleFamily family) const -> std::optional<DomainView>;

        auto motif_from(const DomainView & view, ScaleFamily family, const std::vector<std::size_t> & scale_of_class) const
            -> Motif;

    private:
        const FormalContext & _k;
        std::vector<std::size_t> _row_id;
        std::size_t _row_count = 0;
    };
}
