#include <ordmotif/implications.hh>

#include <stdexcept>

using std::size_t;
using std::vector;

namespace ordmotif
{
    auto ImplicationTheory::add(Implication imp) -> bool
    {
        if (imp.premise.universe() != _universe || imp.conclusion.universe() != _universe)
            throw std::invalid_argument("implication over a different universe");
        for (auto & existing : _implications)
            if (existing == imp)
                return false;
        _implications.push_back(std::move(imp));
        return true;
    }

    auto theory_closure(const ImplicationTheory & t, ObjectSet a) -> ObjectSet
    {
        if (a.universe() != t.universe())
            throw std::invalid_argument("closing a set over a different universe");
        vector<bool> used(t.size(), false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < t.size(); ++i) {
                if (used[i])
                    continue;
                const auto & imp = t.implications()[i];
                if (imp.premise.is_subset_of(a)) {
                    used[i] = true;
                    if (! imp.conclusion.is_subset_of(a)) {
                        a |= imp.conclusion;
                        changed = true;
                    }
                }
            }
        }
        return a;
    }

    auto entails(const ImplicationTheory & t, const Implication & imp) -> bool
    {
        return imp.conclusion.is_subset_of(theory_closure(t, imp.premise));
    }

    auto entails(const ImplicationTheory & t, const ImplicationTheory & other) -> bool
    {
        for (auto & imp : other)
            if (! entails(t, imp))
                return false;
        return true;
    }

    auto theory_base(const FormalContext & k) -> ImplicationTheory
    {
        ImplicationTheory base(k.object_count());
        auto closure = [&](const ObjectSet & a) { return theory_closure(base, a); };

        // NextClosure over the sets closed under the implications found so far;
        // each visited set that is not an extent is pseudo-closed.
        auto current = k.no_objects();
        while (true) {
            auto closed = extent_closure(k, current);
            if (closed != current)
                base.add(Implication{current, closed});
            ObjectSet next;
            if (! next_closure(current, closure, next))
                break;
            current = std::move(next);
        }
        return base;
    }

    auto preimage_theory(const PartialMap & sigma, const ImplicationTheory & t) -> ImplicationTheory
    {
        if (t.universe() != sigma.target_size())
            throw std::invalid_argument("theory does not live on the map's target");
        ImplicationTheory out(sigma.source_size());
        for (auto & imp : t)
            out.add(Implication{sigma.preimage(imp.premise), sigma.preimage(imp.conclusion)});
        return out;
    }

    auto is_scale_measure_by_implications(const FormalContext & k, const FormalContext & s, const PartialMap & sigma)
        -> ImplicationVerdict
    {
        if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
            throw std::logic_error("map does not connect the given contexts");
        if (! sigma.is_total())
            throw std::logic_error("implication check needs a map defined on every object");

        auto image = sigma.image();
        auto scale_on_image = induced_subcontext(s, image, s.all_attributes());
        vector<size_t> reindex(s.object_count(), PartialMap::unmapped);
        size_t next = 0;
        image.for_each([&](size_t t) { reindex[t] = next++; });
        PartialMap onto(k.object_count(), scale_on_image.object_count());
        for (size_t g = 0; g < k.object_count(); ++g)
            onto.assign(g, reindex[sigma(g)]);

        auto pulled = preimage_theory(onto, theory_base(scale_on_image));
        for (size_t g = 0; g < k.object_count(); ++g) {
            auto single = k.no_objects();
            single.insert(g);
            auto fibre = sigma.preimage(ObjectSet::of(s.object_count(), {sigma(g)}));
            if (fibre != single)
                pulled.add(Implication{std::move(single), std::move(fibre)});
        }

        auto base = theory_base(k);
        ImplicationVerdict verdict;
        verdict.is_scale_measure = entails(pulled, base);
        verdict.is_full = verdict.is_scale_measure && entails(base, pulled);
        return verdict;
    }
}
