#include <ordmotif/measure.hh>

#include <stdexcept>

using std::size_t;

namespace ordmotif
{
    namespace
    {
        void require_total(const FormalContext & k, const FormalContext & s, const PartialMap & sigma)
        {
            if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
                throw std::logic_error("map does not connect the given contexts");
            if (! sigma.is_total())
                throw std::logic_error("scale-measure check needs a map defined on every object");
        }

        auto evaluate(const FormalContext & k, const FormalContext & s, const PartialMap & sigma, bool full_witness) -> MeasureVerdict
        {
            require_total(k, s, sigma);
            MeasureVerdict verdict;
            verdict.is_surjective = sigma.is_surjective();

            verdict.is_scale_measure = true;
            for (size_t m = 0; m < s.attribute_count(); ++m) {
                auto pre = sigma.preimage(s.extent_of(m));
                if (extent_closure(k, pre) != pre) {
                    verdict.is_scale_measure = false;
                    verdict.witness = std::move(pre);
                    return verdict;
                }
            }

            // the smallest S-extent over sigma(A) is the only candidate whose
            // preimage can equal A
            verdict.is_full = true;
            for (size_t m = 0; m < k.attribute_count(); ++m) {
                const auto & a = k.extent_of(m);
                if (sigma.preimage(extent_closure(s, sigma.image(a))) != a) {
                    verdict.is_full = false;
                    if (full_witness)
                        verdict.witness = a;
                    break;
                }
            }
            return verdict;
        }
    }

    auto is_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma) -> MeasureVerdict
    {
        return evaluate(k, s, sigma, false);
    }

    auto is_full_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma) -> MeasureVerdict
    {
        return evaluate(k, s, sigma, true);
    }

    auto is_local_scale_measure(const FormalContext & k, const FormalContext & s, const PartialMap & sigma, bool require_full)
        -> MeasureVerdict
    {
        if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
            throw std::logic_error("map does not connect the given contexts");
        auto domain = sigma.domain();
        if (domain.empty())
            throw std::invalid_argument("local scale-measure with an empty domain");

        auto members = domain.members();
        auto sub = induced_subcontext(k, domain, k.all_attributes());
        PartialMap local(members.size(), s.object_count());
        for (size_t i = 0; i < members.size(); ++i)
            local.assign(i, sigma(members[i]));

        auto verdict = evaluate(sub, s, local, require_full);
        if (verdict.witness) {
            ObjectSet lifted(k.object_count());
            verdict.witness->for_each([&](size_t i) { lifted.insert(members[i]); });
            verdict.witness = std::move(lifted);
        }
        return verdict;
    }

    auto restrict(const FormalContext & s, const PartialMap & sigma, const ObjectSet & subdomain) -> Restriction
    {
        if (sigma.target_size() != s.object_count())
            throw std::logic_error("map does not target the given scale");
        if (! subdomain.is_subset_of(sigma.domain()))
            throw std::logic_error("restriction domain is not contained in the map's domain");

        auto image = sigma.image(subdomain);
        auto target = induced_subcontext(s, image, s.all_attributes());

        std::vector<size_t> reindex(s.object_count(), PartialMap::unmapped);
        size_t next = 0;
        image.for_each([&](size_t t) { reindex[t] = next++; });

        PartialMap map(sigma.source_size(), target.object_count());
        subdomain.for_each([&](size_t g) { map.assign(g, reindex[sigma(g)]); });
        return Restriction{std::move(target), std::move(map)};
    }
}
