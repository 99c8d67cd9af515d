#include <ordmotif/context.hh>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    namespace
    {
        void require_unique(const vector<string> & labels, const char * what)
        {
            std::unordered_map<string, size_t> seen;
            for (size_t i = 0; i < labels.size(); ++i)
                if (! seen.emplace(labels[i], i).second)
                    throw std::invalid_argument(string("duplicate ") + what + " label '" + labels[i] + "'");
        }
    }

    FormalContext::FormalContext(vector<string> objects, vector<string> attributes, const vector<vector<bool>> & incidence) :
        _objects(std::move(objects)),
        _attributes(std::move(attributes))
    {
        require_unique(_objects, "object");
        require_unique(_attributes, "attribute");
        if (incidence.size() != _objects.size())
            throw std::invalid_argument("incidence has " + std::to_string(incidence.size()) + " rows, expected " + std::to_string(_objects.size()));

        _rows.assign(_objects.size(), AttributeSet(_attributes.size()));
        _columns.assign(_attributes.size(), ObjectSet(_objects.size()));
        for (size_t g = 0; g < _objects.size(); ++g) {
            if (incidence[g].size() != _attributes.size())
                throw std::invalid_argument("incidence row " + std::to_string(g) + " has length " + std::to_string(incidence[g].size()) + ", expected " + std::to_string(_attributes.size()));
            for (size_t m = 0; m < _attributes.size(); ++m)
                if (incidence[g][m]) {
                    _rows[g].insert(m);
                    _columns[m].insert(g);
                }
        }
    }

    auto FormalContext::incidence_matrix() const -> vector<vector<bool>>
    {
        vector<vector<bool>> out(object_count(), vector<bool>(attribute_count(), false));
        for (size_t g = 0; g < object_count(); ++g)
            _rows[g].for_each([&](size_t m) { out[g][m] = true; });
        return out;
    }

    auto FormalContext::find_object(const string & label) const -> size_t
    {
        auto it = std::find(_objects.begin(), _objects.end(), label);
        return it == _objects.end() ? npos : static_cast<size_t>(it - _objects.begin());
    }

    auto FormalContext::find_attribute(const string & label) const -> size_t
    {
        auto it = std::find(_attributes.begin(), _attributes.end(), label);
        return it == _attributes.end() ? npos : static_cast<size_t>(it - _attributes.begin());
    }

    ExtentFamily::ExtentFamily(size_t universe, vector<ObjectSet> sets) :
        _universe(universe)
    {
        for (auto & s : sets) {
            if (s.universe() != universe)
                throw std::invalid_argument("extent family member over a different universe");
            if (_index.insert(s).second)
                _sets.push_back(std::move(s));
        }
        std::sort(_sets.begin(), _sets.end(), [](const ObjectSet & a, const ObjectSet & b) { return lectic_less(a, b); });
    }

    auto ExtentFamily::is_closure_system() const -> bool
    {
        if (! contains(ObjectSet::full(_universe)))
            return false;
        for (size_t i = 0; i < _sets.size(); ++i)
            for (size_t j = i + 1; j < _sets.size(); ++j)
                if (! contains(_sets[i] & _sets[j]))
                    return false;
        return true;
    }

    auto derive_objects(const FormalContext & k, const ObjectSet & a) -> AttributeSet
    {
        if (a.universe() != k.object_count())
            throw std::invalid_argument("object set does not belong to this context");
        auto out = k.all_attributes();
        a.for_each([&](size_t g) { out &= k.intent_of(g); });
        return out;
    }

    auto derive_attributes(const FormalContext & k, const AttributeSet & b) -> ObjectSet
    {
        if (b.universe() != k.attribute_count())
            throw std::invalid_argument("attribute set does not belong to this context");
        auto out = k.all_objects();
        b.for_each([&](size_t m) { out &= k.extent_of(m); });
        return out;
    }

    auto extent_closure(const FormalContext & k, const ObjectSet & a) -> ObjectSet
    {
        return derive_attributes(k, derive_objects(k, a));
    }

    auto intent_closure(const FormalContext & k, const AttributeSet & b) -> AttributeSet
    {
        return derive_objects(k, derive_attributes(k, b));
    }

    auto all_extents(const FormalContext & k) -> ExtentFamily
    {
        auto closure = [&](const ObjectSet & a) { return extent_closure(k, a); };
        vector<ObjectSet> found;
        auto current = closure(k.no_objects());
        found.push_back(current);
        ObjectSet next;
        while (next_closure(current, closure, next)) {
            found.push_back(next);
            current = std::move(next);
        }
        return ExtentFamily(k.object_count(), std::move(found));
    }

    auto induced_subcontext(const FormalContext & k, const ObjectSet & h, const AttributeSet & n) -> FormalContext
    {
        if (h.universe() != k.object_count() || n.universe() != k.attribute_count())
            throw std::invalid_argument("subcontext selection does not belong to this context");
        auto gs = h.members();
        auto ms = n.members();
        vector<string> objects, attributes;
        for (auto g : gs)
            objects.push_back(k.object(g));
        for (auto m : ms)
            attributes.push_back(k.attribute(m));
        vector<vector<bool>> incidence(gs.size(), vector<bool>(ms.size()));
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = 0; j < ms.size(); ++j)
                incidence[i][j] = k.incident(gs[i], ms[j]);
        return FormalContext(std::move(objects), std::move(attributes), incidence);
    }

    auto dual(const FormalContext & k) -> FormalContext
    {
        vector<vector<bool>> incidence(k.attribute_count(), vector<bool>(k.object_count()));
        for (size_t g = 0; g < k.object_count(); ++g)
            k.intent_of(g).for_each([&](size_t m) { incidence[m][g] = true; });
        return FormalContext(k.attributes(), k.objects(), incidence);
    }

    auto meet_irreducible_extents(const FormalContext & k) -> vector<ObjectSet>
    {
        auto family = all_extents(k);
        vector<ObjectSet> out;
        for (auto & e : family) {
            if (e.is_full())
                continue;
            auto meet = k.all_objects();
            for (auto & f : family)
                if (e.is_proper_subset_of(f))
                    meet &= f;
            if (meet != e)
                out.push_back(e);
        }
        return out;
    }

    auto format_objects(const FormalContext & k, const ObjectSet & a) -> string
    {
        string out = "{";
        bool first = true;
        a.for_each([&](size_t g) {
            if (! first)
                out += ", ";
            out += k.object(g);
            first = false;
        });
        return out + "}";
    }
}
