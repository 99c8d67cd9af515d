#include "domain_matcher.hh"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

using std::optional;
using std::size_t;
using std::vector;

namespace ordmotif::detail
{
    namespace
    {
        constexpr size_t max_classes = 64;

        auto full_mask(size_t k) -> ClassMask
        {
            return k == 64 ? ~ClassMask{0} : (ClassMask{1} << k) - 1;
        }

        auto bit(size_t i) -> ClassMask
        {
            return ClassMask{1} << i;
        }

        auto has(const vector<ClassMask> & sorted, ClassMask m) -> bool
        {
            return std::binary_search(sorted.begin(), sorted.end(), m);
        }

        auto expected_contains_empty(ScaleFamily family, size_t k) -> bool
        {
            switch (family) {
            case ScaleFamily::Nominal:
            case ScaleFamily::Interordinal: return k >= 2;
            case ScaleFamily::Ordinal: return false;
            case ScaleFamily::Contranominal:
            case ScaleFamily::Crown: return true;
            }
            return false;
        }

        /// Walks a path or cycle given as adjacency lists, starting at `start`
        /// and leaving through `first_step`.
        auto walk(const vector<vector<size_t>> & adjacent, size_t start, size_t first_step) -> vector<size_t>
        {
            vector<size_t> order{start};
            auto previous = start;
            auto current = first_step;
            while (current != start && order.size() < adjacent.size()) {
                order.push_back(current);
                auto next = adjacent[current][0] == previous ? (adjacent[current].size() > 1 ? adjacent[current][1] : start)
                                                             : adjacent[current][0];
                previous = current;
                current = next;
            }
            return order;
        }

        /// Class -> scale position for an arrangement listing classes in scale order.
        auto invert(const vector<size_t> & order) -> vector<size_t>
        {
            vector<size_t> out(order.size());
            for (size_t pos = 0; pos < order.size(); ++pos)
                out[order[pos]] = pos;
            return out;
        }

        /// Adjacency of the classes joined by a two-class closed set.
        auto pair_graph(const vector<ClassMask> & nonempty, size_t k, size_t & edges) -> vector<vector<size_t>>
        {
            vector<vector<size_t>> adjacent(k);
            edges = 0;
            for (auto m : nonempty)
                if (std::popcount(m) == 2) {
                    auto a = static_cast<size_t>(std::countr_zero(m));
                    auto b = static_cast<size_t>(std::countr_zero(m & (m - 1)));
                    adjacent[a].push_back(b);
                    adjacent[b].push_back(a);
                    ++edges;
                }
            return adjacent;
        }

        auto arrange(const vector<ClassMask> & nonempty, size_t k, ScaleFamily family) -> optional<vector<size_t>>
        {
            vector<size_t> identity(k);
            for (size_t i = 0; i < k; ++i)
                identity[i] = i;

            switch (family) {
            case ScaleFamily::Nominal:
            case ScaleFamily::Contranominal:
                return identity;

            case ScaleFamily::Ordinal: {
                auto chain = nonempty;
                std::sort(chain.begin(), chain.end(), [](ClassMask a, ClassMask b) { return std::popcount(a) < std::popcount(b); });
                vector<size_t> order;
                ClassMask previous = 0;
                for (auto m : chain) {
                    if ((m & previous) != previous || std::popcount(m ^ previous) != 1)
                        return std::nullopt;
                    order.push_back(static_cast<size_t>(std::countr_zero(m ^ previous)));
                    previous = m;
                }
                return invert(order);
            }

            case ScaleFamily::Interordinal: {
                if (k == 1)
                    return identity;
                size_t edges = 0;
                auto adjacent = pair_graph(nonempty, k, edges);
                if (edges != k - 1)
                    return std::nullopt;
                vector<size_t> ends;
                for (size_t c = 0; c < k; ++c) {
                    if (adjacent[c].empty() || adjacent[c].size() > 2)
                        return std::nullopt;
                    if (adjacent[c].size() == 1)
                        ends.push_back(c);
                }
                if (ends.size() != 2)
                    return std::nullopt;
                optional<vector<size_t>> best;
                for (auto e : ends) {
                    auto order = walk(adjacent, e, adjacent[e][0]);
                    if (order.size() != k)
                        return std::nullopt;
                    auto candidate = invert(order);
                    if (! best || candidate < *best)
                        best = std::move(candidate);
                }
                return best;
            }

            case ScaleFamily::Crown: {
                size_t edges = 0;
                auto adjacent = pair_graph(nonempty, k, edges);
                if (edges != k)
                    return std::nullopt;
                for (auto & a : adjacent)
                    if (a.size() != 2)
                        return std::nullopt;
                optional<vector<size_t>> best;
                for (auto step : adjacent[0]) {
                    auto order = walk(adjacent, 0, step);
                    if (order.size() != k)
                        return std::nullopt;
                    auto candidate = invert(order);
                    if (! best || candidate < *best)
                        best = std::move(candidate);
                }
                return best;
            }
            }
            return std::nullopt;
        }

        /// The nonempty closed sets the family's scale has under the arrangement.
        auto expected_nonempty(ScaleFamily family, const vector<size_t> & scale_of_class) -> vector<ClassMask>
        {
            auto k = scale_of_class.size();
            vector<ClassMask> at(k);
            for (size_t c = 0; c < k; ++c)
                at[scale_of_class[c]] = bit(c);

            vector<ClassMask> out;
            switch (family) {
            case ScaleFamily::Nominal:
                out = at;
                out.push_back(full_mask(k));
                break;
            case ScaleFamily::Ordinal: {
                ClassMask prefix = 0;
                for (auto m : at)
                    out.push_back(prefix |= m);
                break;
            }
            case ScaleFamily::Interordinal:
                for (size_t lo = 0; lo < k; ++lo) {
                    ClassMask run = 0;
                    for (auto hi = lo; hi < k; ++hi)
                        out.push_back(run |= at[hi]);
                }
                break;
            case ScaleFamily::Contranominal:
                // the count check already forces every union of classes
                break;
            case ScaleFamily::Crown:
                for (size_t i = 0; i < k; ++i) {
                    out.push_back(at[i]);
                    out.push_back(at[i] | at[(i + 1) % k]);
                }
                out.push_back(full_mask(k));
                break;
            }
            return out;
        }
    }

    auto scale_extent_count(ScaleFamily family, size_t k) -> optional<size_t>
    {
        if (k < min_arity(family))
            return std::nullopt;
        switch (family) {
        case ScaleFamily::Nominal: return k >= 2 ? k + 2 : 1;
        case ScaleFamily::Ordinal: return k;
        case ScaleFamily::Interordinal: return k >= 2 ? k * (k + 1) / 2 + 1 : 1;
        case ScaleFamily::Contranominal:
            return k >= 63 ? std::numeric_limits<size_t>::max() / 2 : size_t{1} << k;
        case ScaleFamily::Crown: return 2 * k + 2;
        }
        return std::nullopt;
    }

    auto match_classes(const DomainView & view, ScaleFamily family, EmptyExtent mode) -> optional<vector<size_t>>
    {
        auto k = view.class_count;
        auto count = scale_extent_count(family, k);
        if (! count)
            return std::nullopt;

        bool expect_empty = expected_contains_empty(family, k);
        bool has_empty = has(view.closed, 0);
        if (mode == EmptyExtent::Strict && has_empty != expect_empty)
            return std::nullopt;

        vector<ClassMask> nonempty;
        for (auto m : view.closed)
            if (m != 0)
                nonempty.push_back(m);
        if (nonempty.size() != *count - (expect_empty ? 1 : 0))
            return std::nullopt;

        auto arrangement = arrange(nonempty, k, family);
        if (! arrangement)
            return std::nullopt;
        for (auto m : expected_nonempty(family, *arrangement))
            if (! std::binary_search(nonempty.begin(), nonempty.end(), m))
                return std::nullopt;
        return arrangement;
    }

    DomainMatcher::DomainMatcher(const FormalContext & k) :
        _k(k),
        _row_id(k.object_count())
    {
        std::unordered_map<AttributeSet, size_t, IndexSetHash> ids;
        for (size_t g = 0; g < k.object_count(); ++g)
            _row_id[g] = ids.try_emplace(k.intent_of(g), ids.size()).first->second;
        _row_count = ids.size();
    }

    auto DomainMatcher::view(const vector<size_t> & members, size_t bound) const -> optional<DomainView>
    {
        DomainView v;
        v.members = members;
        v.class_of.resize(members.size());
        vector<size_t> representative;
        std::unordered_map<size_t, size_t> class_by_row;
        for (size_t i = 0; i < members.size(); ++i) {
            auto [it, fresh] = class_by_row.try_emplace(_row_id[members[i]], representative.size());
            if (fresh) {
                if (representative.size() == max_classes)
                    throw std::length_error("motif domains are limited to 64 distinguishable objects");
                representative.push_back(members[i]);
            }
            v.class_of[i] = it->second;
        }
        v.class_count = representative.size();
        auto full = full_mask(v.class_count);

        vector<ClassMask> generators;
        for (size_t m = 0; m < _k.attribute_count(); ++m) {
            ClassMask t = 0;
            for (size_t c = 0; c < representative.size(); ++c)
                if (_k.intent_of(representative[c]).bits().test(m))
                    t |= bit(c);
            if (t != full)
                generators.push_back(t);
        }
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

        std::unordered_set<ClassMask> seen{full};
        v.closed.push_back(full);
        for (auto t : generators) {
            if (seen.contains(t))
                continue;
            auto existing = v.closed.size();
            for (size_t i = 0; i < existing; ++i) {
                auto meet = v.closed[i] & t;
                if (seen.insert(meet).second) {
                    v.closed.push_back(meet);
                    if (v.closed.size() > bound)
                        return std::nullopt;
                }
            }
        }
        std::sort(v.closed.begin(), v.closed.end());
        return v;
    }

    auto DomainMatcher::view_for(const vector<size_t> & members, ScaleFamily family) const -> optional<DomainView>
    {
        // classes first, so the bound can depend on their number
        std::unordered_set<size_t> rows;
        for (auto g : members)
            rows.insert(_row_id[g]);
        auto count = scale_extent_count(family, rows.size());
        if (! count)
            return std::nullopt;
        return view(members, *count + 1);
    }

    auto DomainMatcher::motif_from(const DomainView & view, ScaleFamily family, const vector<size_t> & scale_of_class) const -> Motif
    {
        Motif motif;
        motif.family = family;
        motif.arity = view.class_count;
        motif.domain = _k.no_objects();
        motif.map = PartialMap(_k.object_count(), view.class_count);
        for (size_t i = 0; i < view.members.size(); ++i) {
            motif.domain.insert(view.members[i]);
            motif.map.assign(view.members[i], scale_of_class[view.class_of[i]]);
        }
        return motif;
    }
}
