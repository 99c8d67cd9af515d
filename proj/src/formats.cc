#include <ordmotif/io.hh>

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace ordmotif
{
    ParseError::ParseError(size_t line, const string & message) :
        std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        _line(line)
    {
    }

    namespace
    {
        auto split_lines(string_view text) -> vector<string>
        {
            vector<string> lines;
            size_t start = 0;
            while (start < text.size()) {
                auto end = text.find('\n', start);
                if (end == string_view::npos)
                    end = text.size();
                string line(text.substr(start, end - start));
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                lines.push_back(std::move(line));
                start = end + 1;
            }
            return lines;
        }

        auto parse_count(const string & token, size_t line) -> size_t
        {
            size_t value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
                throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
            return value;
        }

        auto trim(string_view s) -> string_view
        {
            auto b = s.find_first_not_of(" \t");
            if (b == string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        }

        /// CSV records with RFC 4180 quoting; each record remembers its first line.
        struct CsvRecord
        {
            size_t line;
            vector<string> fields;
        };

        auto csv_records(string_view text) -> vector<CsvRecord>
        {
            vector<CsvRecord> records;
            CsvRecord current{1, {}};
            string field;
            bool quoted = false, field_started = false, any = false;
            size_t line = 1;

            auto end_field = [&] {
                current.fields.push_back(std::move(field));
                field.clear();
                field_started = false;
            };
            auto end_record = [&] {
                end_field();
                bool blank = current.fields.size() == 1 && current.fields[0].empty();
                if (! blank)
                    records.push_back(std::move(current));
                current = CsvRecord{line + 1, {}};
            };

            for (size_t i = 0; i < text.size(); ++i) {
                char c = text[i];
                any = true;
                if (quoted) {
                    if (c == '"') {
                        if (i + 1 < text.size() && text[i + 1] == '"') {
                            field += '"';
                            ++i;
                        }
                        else
                            quoted = false;
                    }
                    else {
                        if (c == '\n')
                            ++line;
                        field += c;
                    }
                    continue;
                }
                switch (c) {
                case '"':
                    if (field_started)
                        throw ParseError(line, "stray quote inside an unquoted field");
                    quoted = true;
                    field_started = true;
                    break;
                case ',': end_field(); break;
                case '\r': break;
                case '\n':
                    end_record();
                    ++line;
                    break;
                default:
                    field += c;
                    field_started = true;
                }
            }
            if (quoted)
                throw ParseError(line, "unterminated quoted field");
            if (any && (field_started || ! current.fields.empty()))
                end_record();
            return records;
        }
    }

    auto parse_cxt(string_view text) -> FormalContext
    {
        auto lines = split_lines(text);
        size_t at = 0;
        auto next = [&](const char * what) -> const string & {
            if (at >= lines.size())
                throw ParseError(at + 1, string("unexpected end of file, expected ") + what);
            return lines[at++];
        };

        if (trim(next("the 'B' header")) != "B")
            throw ParseError(1, "missing 'B' header");
        next("the name line");
        string token(trim(next("the object count")));
        auto object_count = parse_count(token, at);
        token = trim(next("the attribute count"));
        auto attribute_count = parse_count(token, at);
        if (at < lines.size() && lines[at].empty())
            ++at;

        auto names_line = at + 1;
        vector<string> objects, attributes;
        for (size_t i = 0; i < object_count; ++i)
            objects.push_back(next("an object name"));
        for (size_t i = 0; i < attribute_count; ++i)
            attributes.push_back(next("an attribute name"));

        vector<vector<bool>> incidence;
        for (size_t g = 0; g < object_count; ++g) {
            const auto & row = next("an incidence row");
            if (row.size() != attribute_count)
                throw ParseError(at, "incidence row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(attribute_count));
            vector<bool> cells(attribute_count);
            for (size_t m = 0; m < attribute_count; ++m) {
                switch (row[m]) {
                case 'X':
                case 'x': cells[m] = true; break;
                case '.': break;
                default: throw ParseError(at, string("illegal incidence character '") + row[m] + "'");
                }
            }
            incidence.push_back(std::move(cells));
        }
        for (; at < lines.size(); ++at)
            if (! trim(lines[at]).empty())
                throw ParseError(at + 1, "unexpected content after the incidence rows");

        try {
            return FormalContext(std::move(objects), std::move(attributes), incidence);
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(names_line, e.what());
        }
    }

    auto write_cxt(const FormalContext & k) -> string
    {
        string out = "B\n\n";
        out += std::to_string(k.object_count()) + "\n" + std::to_string(k.attribute_count()) + "\n";
        for (auto & g : k.objects())
            out += g + "\n";
        for (auto & m : k.attributes())
            out += m + "\n";
        for (size_t g = 0; g < k.object_count(); ++g) {
            for (size_t m = 0; m < k.attribute_count(); ++m)
                out += k.incident(g, m) ? 'X' : '.';
            out += '\n';
        }
        return out;
    }

    auto parse_csv(string_view text) -> FormalContext
    {
        auto records = csv_records(text);
        if (records.empty())
            throw ParseError(1, "missing header row");

        auto & header = records.front();
        vector<string> attributes(header.fields.begin() + 1, header.fields.end());
        vector<string> objects;
        vector<vector<bool>> incidence;
        for (size_t r = 1; r < records.size(); ++r) {
            auto & rec = records[r];
            if (rec.fields.size() != header.fields.size())
                throw ParseError(rec.line, "row has " + std::to_string(rec.fields.size()) + " fields, header has " + std::to_string(header.fields.size()));
            objects.push_back(rec.fields[0]);
            vector<bool> cells;
            for (size_t c = 1; c < rec.fields.size(); ++c) {
                auto cell = trim(rec.fields[c]);
                if (cell.empty() || cell == "0")
                    cells.push_back(false);
                else if (cell == "1" || cell == "x" || cell == "X")
                    cells.push_back(true);
                else
                    throw ParseError(rec.line, "illegal cell '" + string(cell) + "'");
            }
            incidence.push_back(std::move(cells));
        }

        try {
            return FormalContext(std::move(objects), std::move(attributes), incidence);
        }
        catch (const std::invalid_argument & e) {
            // name the offending line for duplicate labels
            string what = e.what();
            for (size_t r = 1; r < records.size(); ++r)
                for (size_t q = 1; q < r; ++q)
                    if (records[r].fields[0] == records[q].fields[0])
                        throw ParseError(records[r].line, what);
            throw ParseError(1, what);
        }
    }

    auto read_text_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto read_context_file(const string & path) -> FormalContext
    {
        auto text = read_text_file(path);
        if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
            return parse_csv(text);
        return parse_cxt(text);
    }

    auto parse_map_json(string_view text, const FormalContext & k, const FormalContext & s) -> PartialMap
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(0, string("map file is not valid JSON: ") + e.what());
        }
        if (! doc.is_object() || ! doc.contains("map") || ! doc["map"].is_object())
            throw ParseError(0, "map file needs an object member \"map\"");

        PartialMap sigma(k.object_count(), s.object_count());
        for (auto & [from, to] : doc["map"].items()) {
            if (! to.is_string())
                throw ParseError(0, "map value for '" + from + "' is not a string");
            auto g = k.find_object(from);
            if (g == FormalContext::npos)
                throw ParseError(0, "unknown object '" + from + "'");
            auto t = s.find_object(to.get<string>());
            if (t == FormalContext::npos)
                throw ParseError(0, "unknown scale object '" + to.get<string>() + "'");
            sigma.assign(g, t);
        }
        return sigma;
    }
}
