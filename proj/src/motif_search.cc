#include <ordmotif/motif.hh>

#include "domain_matcher.hh"
#include "parallel.hh"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

using std::optional;
using std::size_t;
using std::vector;

namespace ordmotif
{
    using detail::DomainMatcher;
    using detail::DomainView;

    auto parse_empty_extent(std::string_view name) -> optional<EmptyExtent>
    {
        if (name == "lenient")
            return EmptyExtent::Lenient;
        if (name == "strict")
            return EmptyExtent::Strict;
        return std::nullopt;
    }

    auto match_domain(const FormalContext & k, const ObjectSet & h, ScaleFamily family, EmptyExtent mode) -> optional<Motif>
    {
        if (h.universe() != k.object_count())
            throw std::invalid_argument("domain does not belong to this context");
        if (h.empty())
            return std::nullopt;
        DomainMatcher matcher(k);
        auto view = matcher.view_for(h.members(), family);
        if (! view)
            return std::nullopt;
        auto arrangement = detail::match_classes(*view, family, mode);
        if (! arrangement)
            return std::nullopt;
        return matcher.motif_from(*view, family, *arrangement);
    }

    namespace
    {
        struct Evaluation
        {
            bool grows = false;
            optional<Motif> motif;
        };

        auto lex_less(const Motif & a, const Motif & b) -> bool
        {
            if (a.domain.size() != b.domain.size())
                return a.domain.size() < b.domain.size();
            return a.domain.members() < b.domain.members();
        }

        /// Apriori join: two domains sharing all but their last object give a
        /// candidate, kept only if every one-smaller subset is known.
        auto join(const vector<vector<size_t>> & level, size_t universe) -> vector<vector<size_t>>
        {
            std::unordered_set<ObjectSet, IndexSetHash> known;
            for (auto & d : level)
                known.insert(ObjectSet::of(universe, d));

            vector<vector<size_t>> out;
            for (size_t i = 0; i < level.size();) {
                auto j = i + 1;
                while (j < level.size() && std::equal(level[i].begin(), level[i].end() - 1, level[j].begin()))
                    ++j;
                for (auto a = i; a < j; ++a)
                    for (auto b = a + 1; b < j; ++b) {
                        auto candidate = level[a];
                        candidate.push_back(level[b].back());
                        auto as_set = ObjectSet::of(universe, candidate);
                        bool all_known = true;
                        for (size_t drop = 0; drop + 2 < candidate.size() && all_known; ++drop) {
                            auto subset = as_set;
                            subset.erase(candidate[drop]);
                            all_known = known.contains(subset);
                        }
                        if (all_known)
                            out.push_back(std::move(candidate));
                    }
                i = j;
            }
            return out;
        }
    }

    auto enumerate_motifs(const FormalContext & k, ScaleFamily family, size_t min_size, const SearchOptions & options)
        -> vector<Motif>
    {
        if (! is_hereditary(family))
            throw std::logic_error("levelwise motif enumeration needs a hereditary family; use enumerate_crown_motifs for crowns");

        DomainMatcher matcher(k);
        vector<Motif> found;

        vector<vector<size_t>> candidates;
        for (size_t g = 0; g < k.object_count(); ++g)
            candidates.push_back({g});

        // Lenient matching is hereditary, so it drives the growth; strict
        // matches are always among the lenient ones.
        while (! candidates.empty()) {
            vector<Evaluation> results(candidates.size());
            detail::parallel_for(candidates.size(), options.threads, [&](size_t i) {
                auto view = matcher.view_for(candidates[i], family);
                if (! view)
                    return;
                auto lenient = detail::match_classes(*view, family, EmptyExtent::Lenient);
                if (! lenient)
                    return;
                results[i].grows = true;
                if (candidates[i].size() < min_size)
                    return;
                if (options.empty_extent == EmptyExtent::Lenient)
                    results[i].motif = matcher.motif_from(*view, family, *lenient);
                else if (auto strict = detail::match_classes(*view, family, EmptyExtent::Strict))
                    results[i].motif = matcher.motif_from(*view, family, *strict);
            });

            vector<vector<size_t>> level;
            for (size_t i = 0; i < candidates.size(); ++i) {
                if (results[i].motif)
                    found.push_back(std::move(*results[i].motif));
                if (results[i].grows)
                    level.push_back(std::move(candidates[i]));
            }
            candidates = join(level, k.object_count());
        }

        std::stable_sort(found.begin(), found.end(), lex_less);
        return found;
    }

    namespace
    {
        /// Depth-first search for cycles of object classes whose closure
        /// system is a crown. Paths are grown from their smallest class; every
        /// proper arc of a crown must itself look like the trace of a crown on
        /// a path: singletons, consecutive pairs and the whole arc.
        class CrownSearch
        {
        public:
            CrownSearch(const DomainMatcher & matcher, vector<size_t> representatives) :
                _matcher(matcher),
                _reps(std::move(representatives))
            {
            }

            auto run(const SearchOptions & options) -> vector<vector<size_t>>
            {
                vector<vector<vector<size_t>>> per_start(_reps.size());
                detail::parallel_for(_reps.size(), options.threads, [&](size_t start) {
                    vector<size_t> path{start};
                    extend(path, per_start[start]);
                });
                vector<vector<size_t>> out;
                for (auto & cycles : per_start)
                    for (auto & c : cycles)
                        out.push_back(std::move(c));
                return out;
            }

        private:
            const DomainMatcher & _matcher;
            vector<size_t> _reps;

            auto objects_of(const vector<size_t> & path) const -> vector<size_t>
            {
                vector<size_t> objects;
                for (auto i : path)
                    objects.push_back(_reps[i]);
                std::sort(objects.begin(), objects.end());
                return objects;
            }

            /// Closed sets of the path's objects, as masks over path positions.
            auto closed_by_position(const vector<size_t> & path, size_t bound) const -> optional<vector<detail::ClassMask>>
            {
                auto objects = objects_of(path);
                auto view = _matcher.view(objects, bound);
                if (! view)
                    return std::nullopt;
                // class index follows sorted object order; translate to path order
                vector<size_t> position_of_class(view->class_count);
                for (size_t p = 0; p < path.size(); ++p) {
                    auto at = std::lower_bound(objects.begin(), objects.end(), _reps[path[p]]) - objects.begin();
                    position_of_class[view->class_of[static_cast<size_t>(at)]] = p;
                }
                vector<detail::ClassMask> out;
                for (auto m : view->closed) {
                    detail::ClassMask translated = 0;
                    for (size_t c = 0; c < view->class_count; ++c)
                        if (m >> c & 1)
                            translated |= detail::ClassMask{1} << position_of_class[c];
                    if (translated != 0)
                        out.push_back(translated);
                }
                std::sort(out.begin(), out.end());
                return out;
            }

            static auto arc_pattern(size_t j, bool closed_cycle) -> vector<detail::ClassMask>
            {
                vector<detail::ClassMask> out;
                for (size_t p = 0; p < j; ++p)
                    out.push_back(detail::ClassMask{1} << p);
                for (size_t p = 0; p + 1 < j; ++p)
                    out.push_back(detail::ClassMask{3} << p);
                if (closed_cycle)
                    out.push_back(detail::ClassMask{1} | detail::ClassMask{1} << (j - 1));
                out.push_back(j == 64 ? ~detail::ClassMask{0} : (detail::ClassMask{1} << j) - 1);
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                return out;
            }

            void extend(vector<size_t> & path, vector<vector<size_t>> & out) const
            {
                if (path.size() == 64)
                    throw std::length_error("motif domains are limited to 64 distinguishable objects");
                for (auto next = path.front() + 1; next < _reps.size(); ++next) {
                    if (std::find(path.begin(), path.end(), next) != path.end())
                        continue;
                    path.push_back(next);
                    auto j = path.size();
                    if (auto closed = closed_by_position(path, 2 * j + 3)) {
                        if (j >= 3 && path[1] < path.back() && *closed == arc_pattern(j, true))
                            out.push_back(objects_of(path));
                        if (*closed == arc_pattern(j, false))
                            extend(path, out);
                    }
                    path.pop_back();
                }
            }
        };

        /// Every domain choosing a nonempty subset of each class.
        void expand(const vector<vector<size_t>> & classes, size_t at, vector<size_t> & chosen, vector<vector<size_t>> & out)
        {
            if (at == classes.size()) {
                auto sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(std::move(sorted));
                return;
            }
            const auto & members = classes[at];
            if (members.size() >= 32)
                throw std::length_error("too many indistinguishable objects to expand crown domains");
            for (size_t mask = 1; mask < (size_t{1} << members.size()); ++mask) {
                auto before = chosen.size();
                for (size_t i = 0; i < members.size(); ++i)
                    if (mask >> i & 1)
                        chosen.push_back(members[i]);
                expand(classes, at + 1, chosen, out);
                chosen.resize(before);
            }
        }
    }

    auto enumerate_crown_motifs(const FormalContext & k, size_t min_size, const SearchOptions & options) -> vector<Motif>
    {
        if (min_size < 3)
            throw ArityError("crown motifs need a minimum size of at least 3, got " + std::to_string(min_size));

        DomainMatcher matcher(k);
        vector<vector<size_t>> class_members(matcher.row_count());
        vector<size_t> reps;
        for (size_t g = 0; g < k.object_count(); ++g) {
            auto & members = class_members[matcher.row_id(g)];
            if (members.empty())
                reps.push_back(g);
            members.push_back(g);
        }

        CrownSearch search(matcher, reps);
        auto cycles = search.run(options);

        vector<Motif> found;
        for (auto & cycle : cycles) {
            vector<vector<size_t>> classes;
            for (auto rep : cycle)
                classes.push_back(class_members[matcher.row_id(rep)]);
            vector<vector<size_t>> domains;
            vector<size_t> chosen;
            expand(classes, 0, chosen, domains);
            for (auto & domain : domains) {
                if (domain.size() < min_size)
                    continue;
                auto view = matcher.view_for(domain, ScaleFamily::Crown);
                if (! view)
                    continue;
                if (auto arrangement = detail::match_classes(*view, ScaleFamily::Crown, options.empty_extent))
                    found.push_back(matcher.motif_from(*view, ScaleFamily::Crown, *arrangement));
            }
        }
        std::sort(found.begin(), found.end(), lex_less);
        return found;
    }

    auto maximal_motifs(vector<Motif> motifs) -> vector<Motif>
    {
        vector<size_t> order(motifs.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return motifs[a].domain.size() > motifs[b].domain.size(); });

        vector<bool> keep(motifs.size(), false);
        vector<size_t> kept;
        for (auto i : order) {
            bool covered = false;
            for (auto j : kept)
                if (motifs[i].domain.is_proper_subset_of(motifs[j].domain)) {
                    covered = true;
                    break;
                }
            if (! covered) {
                keep[i] = true;
                kept.push_back(i);
            }
        }

        vector<Motif> out;
        for (size_t i = 0; i < motifs.size(); ++i)
            if (keep[i]) {
                motifs[i].maximal = true;
                out.push_back(std::move(motifs[i]));
            }
        return out;
    }
}
