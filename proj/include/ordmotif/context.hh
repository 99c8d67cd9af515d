#pragma once

#include <ordmotif/index_set.hh>

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

namespace ordmotif
{
    /// A formal context (G, M, I) with labelled objects and attributes.
    ///
    /// Immutable after construction. Both object intents (rows) and attribute
    /// extents (columns) are stored so that derivation in either direction is a
    /// plain intersection of precomputed bitsets.
    class FormalContext
    {
    public:
        FormalContext() = default;

        /// `incidence[g][m]` is true iff object g has attribute m. Throws
        /// std::invalid_argument on duplicate labels or a badly shaped matrix.
        FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
            const std::vector<std::vector<bool>> & incidence);

        auto object_count() const -> std::size_t { return _objects.size(); }
        auto attribute_count() const -> std::size_t { return _attributes.size(); }

        auto objects() const -> const std::vector<std::string> & { return _objects; }
        auto attributes() const -> const std::vector<std::string> & { return _attributes; }
        auto object(std::size_t g) const -> const std::string & { return _objects.at(g); }
        auto attribute(std::size_t m) const -> const std::string & { return _attributes.at(m); }

        auto incident(std::size_t g, std::size_t m) const -> bool { return _rows.at(g).contains(m); }

        /// g' as an attribute set.
        auto intent_of(std::size_t g) const -> const AttributeSet & { return _rows.at(g); }
        /// m' as an object set.
        auto extent_of(std::size_t m) const -> const ObjectSet & { return _columns.at(m); }

        auto no_objects() const -> ObjectSet { return ObjectSet(object_count()); }
        auto all_objects() const -> ObjectSet { return ObjectSet::full(object_count()); }
        auto no_attributes() const -> AttributeSet { return AttributeSet(attribute_count()); }
        auto all_attributes() const -> AttributeSet { return AttributeSet::full(attribute_count()); }

        auto incidence_matrix() const -> std::vector<std::vector<bool>>;

        /// Object index by label, or npos.
        auto find_object(const std::string & label) const -> std::size_t;
        auto find_attribute(const std::string & label) const -> std::size_t;

        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        friend auto operator==(const FormalContext & a, const FormalContext & b) -> bool
        {
            return a._objects == b._objects && a._attributes == b._attributes && a._rows == b._rows;
        }

    private:
        std::vector<std::string> _objects;
        std::vector<std::string> _attributes;
        std::vector<AttributeSet> _rows;
        std::vector<ObjectSet> _columns;
    };

    /// A duplicate-free family of object sets over one context, kept in lectic
    /// order.
    class ExtentFamily
    {
    public:
        ExtentFamily() = default;
        ExtentFamily(std::size_t universe, std::vector<ObjectSet> sets);

        auto universe() const -> std::size_t { return _universe; }
        auto size() const -> std::size_t { return _sets.size(); }
        auto sets() const -> const std::vector<ObjectSet> & { return _sets; }
        auto contains(const ObjectSet & s) const -> bool { return _index.contains(s); }

        auto begin() const { return _sets.begin(); }
        auto end() const { return _sets.end(); }

        /// Contains the universe and is closed under pairwise intersection.
        auto is_closure_system() const -> bool;

        friend auto operator==(const ExtentFamily & a, const ExtentFamily & b) -> bool
        {
            return a._universe == b._universe && a._sets == b._sets;
        }

    private:
        std::size_t _universe = 0;
        std::vector<ObjectSet> _sets;
        std::unordered_set<ObjectSet, IndexSetHash> _index;
    };

    auto derive_objects(const FormalContext & k, const ObjectSet & a) -> AttributeSet;
    auto derive_attributes(const FormalContext & k, const AttributeSet & b) -> ObjectSet;

    /// A''.
    auto extent_closure(const FormalContext & k, const ObjectSet & a) -> ObjectSet;
    auto intent_closure(const FormalContext & k, const AttributeSet & b) -> AttributeSet;

    /// Writes the lectically next closed set after `current` into `out`;
    /// false when there is none. Works for any closure operator on an index
    /// universe.
    template <typename Set, typename Closure>
    auto next_closure(const Set & current, Closure && closure, Set & out) -> bool
    {
        auto n = current.universe();
        for (std::size_t i = n; i-- > 0;) {
            if (current.contains(i))
                continue;
            auto candidate = current.prefix(i);
            candidate.insert(i);
            auto closed = closure(candidate);
            if (closed.prefix(i) == current.prefix(i)) {
                out = std::move(closed);
                return true;
            }
        }
        return false;
    }

    /// All extents in lectic order (NextClosure).
    auto all_extents(const FormalContext & k) -> ExtentFamily;

    /// K[H, N]; label order is inherited from K.
    auto induced_subcontext(const FormalContext & k, const ObjectSet & h, const AttributeSet & n) -> FormalContext;

    /// (M, G, I^d).
    auto dual(const FormalContext & k) -> FormalContext;

    /// Extents that are not the intersection of the extents strictly above them.
    auto meet_irreducible_extents(const FormalContext & k) -> std::vector<ObjectSet>;

    /// `{a, b, c}` using object labels.
    auto format_objects(const FormalContext & k, const ObjectSet & a) -> std::string;
}
