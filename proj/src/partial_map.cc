#include <ordmotif/partial_map.hh>

#include <stdexcept>
#include <string>

using std::size_t;

namespace ordmotif
{
    PartialMap::PartialMap(size_t source_size, size_t target_size) :
        _values(source_size, unmapped),
        _target_size(target_size)
    {
    }

    auto PartialMap::total(size_t target_size, std::vector<size_t> values) -> PartialMap
    {
        PartialMap out(values.size(), target_size);
        for (size_t g = 0; g < values.size(); ++g)
            out.assign(g, values[g]);
        return out;
    }

    auto PartialMap::identity(size_t size) -> PartialMap
    {
        PartialMap out(size, size);
        for (size_t g = 0; g < size; ++g)
            out._values[g] = g;
        return out;
    }

    void PartialMap::assign(size_t g, size_t s)
    {
        if (g >= _values.size())
            throw std::out_of_range("map source index " + std::to_string(g) + " out of range");
        if (s >= _target_size)
            throw std::out_of_range("map target index " + std::to_string(s) + " out of range");
        _values[g] = s;
    }

    void PartialMap::unassign(size_t g)
    {
        _values.at(g) = unmapped;
    }

    auto PartialMap::operator()(size_t g) const -> size_t
    {
        auto v = _values.at(g);
        if (v == unmapped)
            throw std::out_of_range("object " + std::to_string(g) + " is outside the map's domain");
        return v;
    }

    auto PartialMap::domain() const -> ObjectSet
    {
        ObjectSet out(_values.size());
        for (size_t g = 0; g < _values.size(); ++g)
            if (_values[g] != unmapped)
                out.insert(g);
        return out;
    }

    auto PartialMap::is_total() const -> bool
    {
        for (auto v : _values)
            if (v == unmapped)
                return false;
        return true;
    }

    auto PartialMap::image(const ObjectSet & a) const -> ObjectSet
    {
        if (a.universe() != _values.size())
            throw std::invalid_argument("image of a set outside the map's source");
        ObjectSet out(_target_size);
        a.for_each([&](size_t g) {
            if (_values[g] != unmapped)
                out.insert(_values[g]);
        });
        return out;
    }

    auto PartialMap::image() const -> ObjectSet
    {
        ObjectSet out(_target_size);
        for (auto v : _values)
            if (v != unmapped)
                out.insert(v);
        return out;
    }

    auto PartialMap::preimage(const ObjectSet & a) const -> ObjectSet
    {
        if (a.universe() != _target_size)
            throw std::invalid_argument("preimage of a set outside the map's target");
        ObjectSet out(_values.size());
        for (size_t g = 0; g < _values.size(); ++g)
            if (_values[g] != unmapped && a.contains(_values[g]))
                out.insert(g);
        return out;
    }
}
