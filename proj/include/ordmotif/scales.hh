#pragma once

#include <ordmotif/context.hh>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ordmotif
{
    enum class ScaleFamily
    {
        Nominal,
        Ordinal,
        Interordinal,
        Contranominal,
        Crown
    };

    /// Report column order.
    inline constexpr std::array<ScaleFamily, 5> all_families{
        ScaleFamily::Nominal, ScaleFamily::Ordinal, ScaleFamily::Interordinal, ScaleFamily::Contranominal, ScaleFamily::Crown};

    auto family_name(ScaleFamily f) -> std::string_view;
    auto parse_family(std::string_view name) -> std::optional<ScaleFamily>;

    /// Smallest admissible arity: 3 for crowns, 1 otherwise.
    auto min_arity(ScaleFamily f) -> std::size_t;

    /// Thrown for an arity the family does not admit.
    class ArityError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// The standard scale of the family on [n]. Objects are labelled "1".."n".
    /// Interordinal attributes are "1≤".."n≤" followed by "1≥".."n≥".
    auto make_scale(ScaleFamily f, std::size_t n) -> FormalContext;

    /// Extents of make_scale(f, n) from their closed-form description.
    auto scale_extents_direct(ScaleFamily f, std::size_t n) -> ExtentFamily;

    /// Whether every subscale of a family member is again (equivalent to) a
    /// family member. False only for crowns.
    auto is_hereditary(ScaleFamily f) -> bool;
}
