#include <ordmotif/measure.hh>
#include <ordmotif/motif.hh>

using std::optional;
using std::size_t;
using std::vector;

namespace ordmotif
{
    namespace
    {
        /// Backtracking over total maps, objects assigned in index order and
        /// values tried in increasing order, so the first hit is the
        /// lexicographically least.
        class MeasureSearch
        {
        public:
            MeasureSearch(const FormalContext & k, const FormalContext & s, bool full, bool surjective) :
                _k(k),
                _s(s),
                _full(full),
                _surjective(surjective),
                _sigma(k.object_count(), s.object_count()),
                _preimages(s.attribute_count(), k.no_objects()),
                _hits(s.object_count(), 0)
            {
            }

            auto run() -> optional<PartialMap>
            {
                if (_surjective && _s.object_count() > _k.object_count())
                    return std::nullopt;
                if (_k.object_count() > 0 && _s.object_count() == 0)
                    return std::nullopt;
                if (descend(0))
                    return _sigma;
                return std::nullopt;
            }

        private:
            const FormalContext & _k;
            const FormalContext & _s;
            bool _full;
            bool _surjective;
            PartialMap _sigma;
            vector<ObjectSet> _preimages;
            vector<size_t> _hits;

            auto descend(size_t g) -> bool
            {
                if (g == _k.object_count()) {
                    if (_surjective && unhit() > 0)
                        return false;
                    auto verdict = is_full_scale_measure(_k, _s, _sigma);
                    return _full ? verdict.is_full : verdict.is_scale_measure;
                }

                for (size_t t = 0; t < _s.object_count(); ++t) {
                    assign(g, t);
                    if (consistent(g) && descend(g + 1))
                        return true;
                    unassign(g, t);
                }
                return false;
            }

            auto unhit() const -> size_t
            {
                size_t n = 0;
                for (auto h : _hits)
                    n += h == 0;
                return n;
            }

            void assign(size_t g, size_t t)
            {
                _sigma.assign(g, t);
                ++_hits[t];
                _s.intent_of(t).for_each([&](size_t m) { _preimages[m].insert(g); });
            }

            void unassign(size_t g, size_t t)
            {
                _sigma.unassign(g);
                --_hits[t];
                _s.intent_of(t).for_each([&](size_t m) { _preimages[m].erase(g); });
            }

            /// Necessary conditions on the assigned prefix 0..g.
            auto consistent(size_t g) -> bool
            {
                auto remaining = _k.object_count() - g - 1;
                if (_surjective && unhit() > remaining)
                    return false;

                // a preimage restricted to the prefix must be the trace of an
                // extent, so its closure may not add prefix objects
                auto prefix = _k.all_objects().prefix(g + 1);
                for (auto & pre : _preimages)
                    if ((extent_closure(_k, pre) & prefix) != pre)
                        return false;

                // a full measure never merges distinguishable objects
                if (_full)
                    for (size_t h = 0; h < g; ++h)
                        if (_sigma(h) == _sigma(g) && _k.intent_of(h) != _k.intent_of(g))
                            return false;
                return true;
            }
        };
    }

    auto exists_surjective_sm(const FormalContext & k, const FormalContext & s) -> optional<PartialMap>
    {
        return MeasureSearch(k, s, false, true).run();
    }

    auto exists_full_sm(const FormalContext & k, const FormalContext & s, bool require_surjective) -> optional<PartialMap>
    {
        return MeasureSearch(k, s, true, require_surjective).run();
    }
}
