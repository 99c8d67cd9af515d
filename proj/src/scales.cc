#include <ordmotif/scales.hh>

#include <stdexcept>

using std::size_t;
using std::string;
using std::vector;

namespace ordmotif
{
    auto family_name(ScaleFamily f) -> std::string_view
    {
        switch (f) {
        case ScaleFamily::Nominal: return "nominal";
        case ScaleFamily::Ordinal: return "ordinal";
        case ScaleFamily::Interordinal: return "interordinal";
        case ScaleFamily::Contranominal: return "contranominal";
        case ScaleFamily::Crown: return "crown";
        }
        throw std::logic_error("unknown scale family");
    }

    auto parse_family(std::string_view name) -> std::optional<ScaleFamily>
    {
        for (auto f : all_families)
            if (family_name(f) == name)
                return f;
        return std::nullopt;
    }

    auto min_arity(ScaleFamily f) -> size_t
    {
        return f == ScaleFamily::Crown ? 3 : 1;
    }

    namespace
    {
        void check_arity(ScaleFamily f, size_t n)
        {
            if (n < min_arity(f))
                throw ArityError(string(family_name(f)) + " scale needs arity at least " + std::to_string(min_arity(f)) + ", got " + std::to_string(n));
        }

        auto numbered(size_t n, const string & suffix = "") -> vector<string>
        {
            vector<string> out;
            for (size_t i = 1; i <= n; ++i)
                out.push_back(std::to_string(i) + suffix);
            return out;
        }

        template <typename Rel>
        auto relation_scale(size_t n, Rel && rel) -> FormalContext
        {
            vector<vector<bool>> incidence(n, vector<bool>(n));
            for (size_t a = 1; a <= n; ++a)
                for (size_t b = 1; b <= n; ++b)
                    incidence[a - 1][b - 1] = rel(a, b);
            return FormalContext(numbered(n), numbered(n), incidence);
        }

        /// {lo..hi} in 1-based scale numbering.
        auto interval(size_t n, size_t lo, size_t hi) -> ObjectSet
        {
            ObjectSet s(n);
            for (auto i = lo; i <= hi; ++i)
                s.insert(i - 1);
            return s;
        }
    }

    auto make_scale(ScaleFamily f, size_t n) -> FormalContext
    {
        check_arity(f, n);
        switch (f) {
        case ScaleFamily::Nominal:
            return relation_scale(n, [](size_t a, size_t b) { return a == b; });
        case ScaleFamily::Ordinal:
            return relation_scale(n, [](size_t a, size_t b) { return a <= b; });
        case ScaleFamily::Contranominal:
            return relation_scale(n, [](size_t a, size_t b) { return a != b; });
        case ScaleFamily::Crown:
            return relation_scale(n, [n](size_t a, size_t b) { return a == b || (a == n && b == 1) || b == a + 1; });
        case ScaleFamily::Interordinal: {
            auto attributes = numbered(n, "≤");
            for (auto & label : numbered(n, "≥"))
                attributes.push_back(label);
            vector<vector<bool>> incidence(n, vector<bool>(2 * n));
            for (size_t a = 1; a <= n; ++a)
                for (size_t b = 1; b <= n; ++b) {
                    incidence[a - 1][b - 1] = a <= b;
                    incidence[a - 1][n + b - 1] = a >= b;
                }
            return FormalContext(numbered(n), std::move(attributes), incidence);
        }
        }
        throw std::logic_error("unknown scale family");
    }

    auto scale_extents_direct(ScaleFamily f, size_t n) -> ExtentFamily
    {
        check_arity(f, n);
        vector<ObjectSet> sets;
        auto empty = ObjectSet(n);
        auto full = ObjectSet::full(n);
        switch (f) {
        case ScaleFamily::Nominal:
            if (n >= 2)
                sets.push_back(empty);
            for (size_t i = 1; i <= n; ++i)
                sets.push_back(interval(n, i, i));
            sets.push_back(full);
            break;
        case ScaleFamily::Ordinal:
            for (size_t k = 1; k <= n; ++k)
                sets.push_back(interval(n, 1, k));
            break;
        case ScaleFamily::Interordinal:
            if (n >= 2)
                sets.push_back(empty);
            for (size_t lo = 1; lo <= n; ++lo)
                for (size_t hi = lo; hi <= n; ++hi)
                    sets.push_back(interval(n, lo, hi));
            break;
        case ScaleFamily::Contranominal:
            if (n >= 8 * sizeof(size_t) - 1)
                throw std::length_error("contranominal extent listing needs n < 63");
            for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
                ObjectSet s(n);
                for (size_t i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        s.insert(i);
                sets.push_back(s);
            }
            break;
        case ScaleFamily::Crown:
            sets.push_back(empty);
            for (size_t i = 1; i <= n; ++i) {
                sets.push_back(interval(n, i, i));
                auto pair = interval(n, i, i);
                pair.insert(i % n);
                sets.push_back(pair);
            }
            sets.push_back(full);
            break;
        }
        return ExtentFamily(n, std::move(sets));
    }

    auto is_hereditary(ScaleFamily f) -> bool
    {
        return f != ScaleFamily::Crown;
    }
}
