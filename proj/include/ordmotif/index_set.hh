#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordmotif
{
    /// A subset of the index range [0, universe) of one context dimension.
    ///
    /// The tag keeps object sets and attribute sets from being mixed up. Binary
    /// operations require both operands to live in the same universe.
    template <typename Tag>
    class IndexSet
    {
    public:
        using Bits = boost::dynamic_bitset<std::uint64_t>;
        static constexpr std::size_t npos = Bits::npos;

        IndexSet() = default;
        explicit IndexSet(std::size_t universe) : _bits(universe) {}
        explicit IndexSet(Bits bits) : _bits(std::move(bits)) {}

        static auto full(std::size_t universe) -> IndexSet
        {
            IndexSet s(universe);
            s._bits.set();
            return s;
        }

        static auto of(std::size_t universe, std::initializer_list<std::size_t> members) -> IndexSet
        {
            IndexSet s(universe);
            for (auto i : members)
                s.insert(i);
            return s;
        }

        static auto of(std::size_t universe, const std::vector<std::size_t> & members) -> IndexSet
        {
            IndexSet s(universe);
            for (auto i : members)
                s.insert(i);
            return s;
        }

        auto universe() const -> std::size_t { return _bits.size(); }
        auto size() const -> std::size_t { return _bits.count(); }
        auto empty() const -> bool { return _bits.none(); }
        auto is_full() const -> bool { return _bits.all(); }

        auto contains(std::size_t i) const -> bool
        {
            check_index(i);
            return _bits.test(i);
        }

        void insert(std::size_t i)
        {
            check_index(i);
            _bits.set(i);
        }

        void erase(std::size_t i)
        {
            check_index(i);
            _bits.reset(i);
        }

        auto first() const -> std::size_t { return _bits.find_first(); }
        auto next(std::size_t i) const -> std::size_t { return _bits.find_next(i); }

        auto members() const -> std::vector<std::size_t>
        {
            std::vector<std::size_t> out;
            out.reserve(size());
            for (auto i = first(); i != npos; i = next(i))
                out.push_back(i);
            return out;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (auto i = first(); i != npos; i = next(i))
                f(i);
        }

        auto is_subset_of(const IndexSet & other) const -> bool
        {
            check_same(other);
            return _bits.is_subset_of(other._bits);
        }

        auto is_proper_subset_of(const IndexSet & other) const -> bool
        {
            check_same(other);
            return _bits.is_proper_subset_of(other._bits);
        }

        auto intersects(const IndexSet & other) const -> bool
        {
            check_same(other);
            return _bits.intersects(other._bits);
        }

        auto operator&=(const IndexSet & other) -> IndexSet &
        {
            check_same(other);
            _bits &= other._bits;
            return *this;
        }

        auto operator|=(const IndexSet & other) -> IndexSet &
        {
            check_same(other);
            _bits |= other._bits;
            return *this;
        }

        auto operator-=(const IndexSet & other) -> IndexSet &
        {
            check_same(other);
            _bits -= other._bits;
            return *this;
        }

        friend auto operator&(IndexSet a, const IndexSet & b) -> IndexSet { return a &= b; }
        friend auto operator|(IndexSet a, const IndexSet & b) -> IndexSet { return a |= b; }
        friend auto operator-(IndexSet a, const IndexSet & b) -> IndexSet { return a -= b; }

        auto complement() const -> IndexSet { return IndexSet(~_bits); }

        /// Members strictly below `bound`.
        auto prefix(std::size_t bound) const -> IndexSet
        {
            IndexSet out(*this);
            for (auto i = bound; i < universe(); ++i)
                out._bits.reset(i);
            return out;
        }

        friend auto operator==(const IndexSet & a, const IndexSet & b) -> bool = default;

        /// Lectic order: the smallest element of the symmetric difference decides,
        /// the set containing it is the larger one.
        friend auto lectic_less(const IndexSet & a, const IndexSet & b) -> bool
        {
            a.check_same(b);
            auto diff = a._bits ^ b._bits;
            auto i = diff.find_first();
            return i != npos && b._bits.test(i);
        }

        auto bits() const -> const Bits & { return _bits; }

        auto hash() const -> std::size_t { return boost::hash_value(_bits); }

    private:
        Bits _bits;

        void check_index(std::size_t i) const
        {
            if (i >= _bits.size())
                throw std::out_of_range("index " + std::to_string(i) + " outside universe of size " + std::to_string(_bits.size()));
        }

        void check_same(const IndexSet & other) const
        {
            if (other._bits.size() != _bits.size())
                throw std::invalid_argument("index sets over different universes");
        }
    };

    struct ObjectTag
    {
    };
    struct AttributeTag
    {
    };

    using ObjectSet = IndexSet<ObjectTag>;
    using AttributeSet = IndexSet<AttributeTag>;

    struct IndexSetHash
    {
        template <typename Tag>
        auto operator()(const IndexSet<Tag> & s) const -> std::size_t
        {
            return s.hash();
        }
    };
}
