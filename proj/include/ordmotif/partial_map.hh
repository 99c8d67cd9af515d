#pragma once

#include <ordmotif/index_set.hh>

#include <cstddef>
#include <vector>

namespace ordmotif
{
    /// A map sigma: H -> G_S from a subset H of a source context's objects into
    /// the objects of a target context.
    ///
    /// Only the universe sizes of source and target are recorded; the contexts
    /// themselves are passed alongside wherever they are needed.
    class PartialMap
    {
    public:
        static constexpr std::size_t unmapped = static_cast<std::size_t>(-1);

        PartialMap() = default;
        PartialMap(std::size_t source_size, std::size_t target_size);

        /// Total map from a value table of length source_size.
        static auto total(std::size_t target_size, std::vector<std::size_t> values) -> PartialMap;
        static auto identity(std::size_t size) -> PartialMap;

        auto source_size() const -> std::size_t { return _values.size(); }
        auto target_size() const -> std::size_t { return _target_size; }

        void assign(std::size_t g, std::size_t s);
        void unassign(std::size_t g);

        auto defined(std::size_t g) const -> bool { return _values.at(g) != unmapped; }
        auto operator()(std::size_t g) const -> std::size_t;

        auto domain() const -> ObjectSet;
        auto is_total() const -> bool;

        /// sigma(A) over the target objects; members of A outside H are ignored.
        auto image(const ObjectSet & a) const -> ObjectSet;
        auto image() const -> ObjectSet;

        /// {g in H | sigma(g) in A}.
        auto preimage(const ObjectSet & a) const -> ObjectSet;

        auto is_surjective() const -> bool { return image().is_full(); }

        /// Value table with `unmapped` for objects outside H.
        auto values() const -> const std::vector<std::size_t> & { return _values; }

        friend auto operator==(const PartialMap &, const PartialMap &) -> bool = default;

    private:
        std::vector<std::size_t> _values;
        std::size_t _target_size = 0;
    };
}
