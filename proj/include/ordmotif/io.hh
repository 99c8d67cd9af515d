#pragma once

#include <ordmotif/context.hh>
#include <ordmotif/motif.hh>
#include <ordmotif/partial_map.hh>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordmotif
{
    /// Malformed input; `line()` is 1-based, 0 when no line applies.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string & message);

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /// Burmeister format: "B", a name line, |G|, |M|, an optional blank line,
    /// object names, attribute names, then one row per object over {X, x, .}.
    auto parse_cxt(std::string_view text) -> FormalContext;

    /// Uppercase X, no blank line, empty name line, LF endings.
    auto write_cxt(const FormalContext & k) -> std::string;

    /// Header row of attribute names (first cell ignored), then one row per
    /// object: its name followed by cells from {"", "0"} or {"1", "x", "X"}.
    auto parse_csv(std::string_view text) -> FormalContext;

    /// Dispatches on the file extension: ".csv" is CSV, anything else cxt.
    auto read_context_file(const std::string & path) -> FormalContext;

    auto read_text_file(const std::string & path) -> std::string;

    /// `{"map": {"<object>": "<scale object>", ...}}` resolved against the two
    /// contexts. Objects of K missing from the map stay outside the domain.
    auto parse_map_json(std::string_view text, const FormalContext & k, const FormalContext & s) -> PartialMap;

    struct ReportDocument
    {
        std::string markdown;
        std::string tsv;
    };

    /// Census table (local full, maximal, largest per family) followed by the
    /// largest motif of each family with its basic meaning.
    auto render_report(const FormalContext & k, const MotifCensus & census) -> ReportDocument;

    /// Cover relation of the extent lattice as a DOT digraph. Nodes carry the
    /// objects whose object concept they are; highlighted objects are bold.
    auto export_dot(const FormalContext & k, const std::optional<ObjectSet> & highlight = std::nullopt) -> std::string;
}
