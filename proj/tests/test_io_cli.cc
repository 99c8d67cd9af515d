#include <doctest.h>

#include "oracles.hh"

#include <ordmotif/cli.hh>
#include <ordmotif/io.hh>
#include <ordmotif/scales.hh>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ordmotif;

namespace
{
    auto data(const std::string & name) -> std::string
    {
        auto dir = std::getenv("ORDMOTIF_DATA");
        return std::string(dir ? dir : "tests/data") + "/" + name;
    }

    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = cli_main(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto error_line(const std::string & text, bool csv = false) -> std::size_t
    {
        try {
            if (csv)
                parse_csv(text);
            else
                parse_cxt(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    }

    auto count(const std::string & text, const std::string & needle) -> std::size_t
    {
        std::size_t n = 0;
        for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
            ++n;
        return n;
    }
}

TEST_CASE("parse_cxt")
{
    auto k = parse_cxt("B\n\n1\n1\ng\nm\nX\n");
    CHECK(k.objects() == std::vector<std::string>{"g"});
    CHECK(k.attributes() == std::vector<std::string>{"m"});
    CHECK(k.incident(0, 0));

    // name line, no blank separator, CRLF, lowercase x, no final newline
    auto k2 = parse_cxt("B\r\nsome name\r\n2\r\n1\r\na\r\nb\r\nm\r\nx\r\n.");
    CHECK(k2.object_count() == 2);
    CHECK(k2.incident(0, 0));
    CHECK(! k2.incident(1, 0));

    auto empty = parse_cxt("B\n\n0\n0\n");
    CHECK(empty.object_count() == 0);
}

TEST_CASE("parse_cxt errors carry line numbers")
{
    CHECK(error_line("A\n\n1\n1\ng\nm\nX\n") == 1);
    CHECK(error_line("B\n\none\n1\ng\nm\nX\n") == 3);
    CHECK(error_line("B\n\n1\n-1\ng\nm\nX\n") == 4);
    CHECK(error_line("B\n\n1\n2\n\ng\nm\nn\nX\n") == 9);
    CHECK(error_line("B\n\n2\n1\n\ng\nh\nm\nX\nXX\n") == 10);
    CHECK(error_line("B\n\n1\n1\ng\nm\nO\n") == 7);
    CHECK(error_line("B\n\n2\n1\ng\nh\nm\nX\n") == 9);
    CHECK(error_line("B\n\n1\n1\ng\nm\nX\nextra\n") == 8);
    CHECK(error_line("B\n\n2\n1\ng\ng\nm\nX\nX\n") == 5);
}

TEST_CASE("cxt round trip")
{
    auto n2 = make_scale(ScaleFamily::Nominal, 2);
    CHECK(write_cxt(n2) == "B\n\n2\n2\n1\n2\n1\n2\nX.\n.X\n");
    CHECK(parse_cxt(write_cxt(n2)) == n2);

    std::mt19937 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto k = oracle::random_context(rng, rng() % 7, rng() % 7);
        CHECK(parse_cxt(write_cxt(k)) == k);
    }
    auto i3 = make_scale(ScaleFamily::Interordinal, 3);
    CHECK(parse_cxt(write_cxt(i3)) == i3);
}

TEST_CASE("parse_csv")
{
    auto k = parse_csv("obj,1,2\n1,1,0\n2,,x\n");
    CHECK(k.incidence_matrix() == make_scale(ScaleFamily::Nominal, 2).incidence_matrix());
    CHECK(k.objects() == std::vector<std::string>{"1", "2"});
    CHECK(k.attributes() == std::vector<std::string>{"1", "2"});

    auto q = parse_csv("\"\",\"a, b\",c\r\n\"say \"\"hi\"\"\",X, 0 \r\n\n");
    CHECK(q.attributes() == std::vector<std::string>{"a, b", "c"});
    CHECK(q.objects() == std::vector<std::string>{"say \"hi\""});
    CHECK(q.incident(0, 0));
    CHECK(! q.incident(0, 1));

    CHECK(error_line("o,m\ng,1\ng,0\n", true) == 3);
    CHECK(error_line("o,m,n\ng,1\n", true) == 2);
    CHECK(error_line("o,m\ng,yes\n", true) == 2);
    CHECK(error_line("o,m,m\ng,1,1\n", true) == 1);
    CHECK(error_line("", true) == 1);
    CHECK_THROWS_AS(parse_csv("o,\"m\n"), ParseError);
}

TEST_CASE("read_context_file dispatches on the extension")
{
    auto a = read_context_file(data("chain.cxt"));
    auto b = read_context_file(data("chain.csv"));
    CHECK(a == b);
    CHECK_THROWS(read_context_file(data("missing.cxt")));
}

TEST_CASE("parse_map_json")
{
    auto k = read_context_file(data("chain.cxt"));
    auto s = read_context_file(data("o2.cxt"));
    auto m = parse_map_json(read_text_file(data("ends.json")), k, s);
    CHECK(m.domain() == ObjectSet::of(3, {0, 2}));
    CHECK(m(0) == 1);
    CHECK(m(2) == 0);
    CHECK_THROWS_AS(parse_map_json("{\"map\": {\"q\": \"1\"}}", k, s), ParseError);
    CHECK_THROWS_AS(parse_map_json("{\"map\": {\"a\": \"9\"}}", k, s), ParseError);
    CHECK_THROWS_AS(parse_map_json("{\"map\": {\"a\": 1}}", k, s), ParseError);
    CHECK_THROWS_AS(parse_map_json("{\"a\": \"1\"}", k, s), ParseError);
    CHECK_THROWS_AS(parse_map_json("{", k, s), ParseError);
}

TEST_CASE("render_report")
{
    FormalContext empty({}, {}, {});
    auto doc = render_report(empty, census(empty));
    CHECK(doc.tsv ==
          "\tnominal\tordinal\tinterordinal\tcontranominal\tcrown\n"
          "local full sm\t0\t0\t0\t0\t0\n"
          "maximal lf-sm\t0\t0\t0\t0\t0\n"
          "largest lf-sm\t0\t0\t0\t0\t0\n");

    auto n3 = make_scale(ScaleFamily::Nominal, 3);
    CensusOptions options;
    options.min_size = {2, 2, 2, 2, 3};
    auto r = render_report(n3, census(n3, options));
    std::istringstream lines(r.tsv);
    std::vector<std::vector<std::string>> cells;
    for (std::string line; std::getline(lines, line);) {
        cells.emplace_back();
        std::istringstream fields(line);
        for (std::string f; std::getline(fields, f, '\t');)
            cells.back().push_back(f);
    }
    REQUIRE(cells.size() == 4);
    CHECK(cells[1][1] == "4");
    CHECK(cells[2][1] == "1");
    CHECK(cells[3][1] == "3");
    CHECK(r.markdown.find("| local full sm | 4 |") != std::string::npos);
    CHECK(r.markdown.find("1, 2 and 3 form a partition.") != std::string::npos);

    std::mt19937 rng(3);
    auto k = oracle::random_context(rng, 8, 7);
    CensusOptions threaded;
    threaded.search.threads = 3;
    auto a = render_report(k, census(k)), b = render_report(k, census(k, threaded));
    CHECK(a.markdown == b.markdown);
    CHECK(a.tsv == b.tsv);
}

TEST_CASE("export_dot")
{
    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    auto chain = export_dot(o3);
    CHECK(count(chain, "label=") == 3);
    CHECK(count(chain, " -> ") == 2);
    CHECK(chain.rfind("digraph", 0) == 0);

    auto b3 = make_scale(ScaleFamily::Contranominal, 3);
    auto cube = export_dot(b3);
    CHECK(count(cube, "label=") == 8);
    CHECK(count(cube, " -> ") == 12);

    CHECK(count(export_dot(b3, b3.no_objects()), "<B>") == 0);
    CHECK(count(export_dot(b3, ObjectSet::of(3, {0, 2})), "<B>") == 2);

    FormalContext odd({"a<b"}, {}, {{}});
    CHECK(export_dot(odd).find("a&lt;b") != std::string::npos);
}

TEST_CASE("cli extents and dual")
{
    auto r = run({"extents", data("chain.cxt")});
    CHECK(r.code == 0);
    CHECK(r.out == "{c}\n{b, c}\n{a, b, c}\n");

    r = run({"dual", data("chain.cxt")});
    CHECK(r.code == 0);
    auto d = parse_cxt(r.out);
    CHECK(d.objects() == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("cli verify")
{
    auto r = run({"verify", data("chain.cxt"), data("chain.cxt"), "--map", data("identity.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("full scale-measure: yes") != std::string::npos);

    r = run({"verify", data("chain.cxt"), data("o2.cxt"), "--map", data("ends.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("domain: {a, c}") != std::string::npos);
    CHECK(r.out.find("surjective: yes") != std::string::npos);

    // map labels unknown to the source context
    r = run({"verify", data("o2.cxt"), data("chain.cxt"), "--map", data("identity.json")});
    CHECK(r.code == 2);

    r = run({"verify", data("chain.cxt"), data("chain.cxt")});
    CHECK(r.code == 2);
}

TEST_CASE("cli verify negative verdict")
{
    auto path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/ordmotif_swap.json";
    {
        std::ofstream f(path);
        f << R"({"map": {"a": "c", "b": "b", "c": "a"}})";
    }
    auto r = run({"verify", data("chain.cxt"), data("chain.cxt"), "--map", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("scale-measure: no") != std::string::npos);
    CHECK(r.out.find("witness: ") != std::string::npos);
}

TEST_CASE("cli find")
{
    auto r = run({"find", "--family", "ordinal", "--maximal", data("chain.cxt")});
    CHECK(r.code == 0);
    CHECK(r.out == "3\t3\t{a, b, c}\ta->3, b->2, c->1\n");

    r = run({"find", "--family", "crown", data("chain.cxt")});
    CHECK(r.code == 1);
    CHECK(r.out.empty());

    r = run({"find", "--family", "ordinal", "--min-size", "2", "--empty-extent", "strict", data("chain.csv")});
    CHECK(r.code == 0);
    // {a, b} has the empty set as an extent
    CHECK(count(r.out, "\n") == 3);
    CHECK(r.out.find("{a, b}\t") == std::string::npos);

    CHECK(run({"find", "--family", "biordinal", data("chain.cxt")}).code == 2);
    CHECK(run({"find", "--family", "ordinal", "--empty-extent", "loose", data("chain.cxt")}).code == 2);
}

TEST_CASE("cli report")
{
    auto r = run({"report", "--format", "tsv", data("chain.cxt")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("\tnominal\tordinal", 0) == 0);
    CHECK(r.out.find("local full sm\t3\t7\t3\t3\t0\n") != std::string::npos);

    r = run({"report", "--dual", "--min-size", "2", data("chain.cxt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("# Ordinal motif census") == 0);

    CHECK(run({"report", "--format", "html", data("chain.cxt")}).code == 2);
}

TEST_CASE("cli reduce and dot")
{
    auto r = run({"reduce", "--mode", "si", data("triangle.graph")});
    CHECK(r.code == 0);
    auto k = parse_cxt(r.out);
    CHECK(k.object_count() == 4);
    CHECK(k.attribute_count() == 7);

    r = run({"reduce", "--mode", "isi", data("triangle.graph")});
    CHECK(parse_cxt(r.out).object_count() == 3);
    CHECK(run({"reduce", "--mode", "xi", data("triangle.graph")}).code == 2);
    CHECK(run({"reduce", "--mode", "si", data("chain.cxt")}).code == 2);

    r = run({"dot", "--highlight", "a,c", data("chain.cxt")});
    CHECK(r.code == 0);
    CHECK(count(r.out, "<B>") == 2);
    CHECK(run({"dot", "--highlight", "q", data("chain.cxt")}).code == 2);
}

TEST_CASE("cli usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"extents", "--nope", data("chain.cxt")}).code == 2);
    CHECK(run({"extents", data("missing.cxt")}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("extents") != std::string::npos);
}
