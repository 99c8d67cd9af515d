#include <doctest.h>

#include "oracles.hh"

#include <ordmotif/context.hh>
#include <ordmotif/scales.hh>

using namespace ordmotif;
using oracle::Mask;

namespace
{
    auto set(const FormalContext & k, std::initializer_list<std::size_t> one_based) -> ObjectSet
    {
        ObjectSet s(k.object_count());
        for (auto i : one_based)
            s.insert(i - 1);
        return s;
    }

    auto attrs(const FormalContext & k, std::initializer_list<std::size_t> one_based) -> AttributeSet
    {
        AttributeSet s(k.attribute_count());
        for (auto i : one_based)
            s.insert(i - 1);
        return s;
    }

    auto masks(const ExtentFamily & f) -> std::set<Mask>
    {
        std::set<Mask> out;
        for (auto & e : f)
            out.insert(oracle::to_mask(e));
        return out;
    }
}

TEST_CASE("context construction validates labels and shape")
{
    CHECK_THROWS_AS(FormalContext({"a", "a"}, {"m"}, {{true}, {false}}), std::invalid_argument);
    CHECK_THROWS_AS(FormalContext({"a"}, {"m", "m"}, {{true, false}}), std::invalid_argument);
    CHECK_THROWS_AS(FormalContext({"a", "b"}, {"m"}, {{true}}), std::invalid_argument);
    CHECK_THROWS_AS(FormalContext({"a"}, {"m"}, {{true, true}}), std::invalid_argument);
    FormalContext k({"a", "b"}, {"m"}, {{true}, {false}});
    CHECK(k.find_object("b") == 1);
    CHECK(k.find_attribute("x") == FormalContext::npos);
}

TEST_CASE("derive_objects")
{
    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    CHECK(derive_objects(o3, o3.no_objects()) == o3.all_attributes());
    auto n2 = make_scale(ScaleFamily::Nominal, 2);
    CHECK(derive_objects(n2, set(n2, {1})) == attrs(n2, {1}));
    CHECK(derive_objects(n2, set(n2, {1, 2})) == n2.no_attributes());
}

TEST_CASE("derive_attributes")
{
    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    CHECK(derive_attributes(o3, o3.no_attributes()) == o3.all_objects());
    CHECK(derive_attributes(o3, attrs(o3, {2})) == set(o3, {1, 2}));
    auto b3 = make_scale(ScaleFamily::Contranominal, 3);
    CHECK(derive_attributes(b3, attrs(b3, {1, 2, 3})) == b3.no_objects());
}

TEST_CASE("extent_closure")
{
    auto n3 = make_scale(ScaleFamily::Nominal, 3);
    CHECK(extent_closure(n3, set(n3, {1})) == set(n3, {1}));
    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    CHECK(extent_closure(o3, set(o3, {3})) == set(o3, {1, 2, 3}));
    auto c3 = make_scale(ScaleFamily::Crown, 3);
    CHECK(extent_closure(c3, set(c3, {1, 2})) == set(c3, {1, 2}));
}

TEST_CASE("extent closure is a closure operator")
{
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        auto g = 1 + rng() % 8, m = rng() % 9;
        auto k = oracle::random_context(rng, g, m, 0.3 + 0.4 * (round % 3) / 2.0);
        for (int t = 0; t < 20; ++t) {
            Mask a = rng() & oracle::full_mask(g), c = a | (rng() & oracle::full_mask(g));
            auto sa = oracle::to_set(g, a), sc = oracle::to_set(g, c);
            auto ca = extent_closure(k, sa);
            CHECK(sa.is_subset_of(ca));
            CHECK(extent_closure(k, ca) == ca);
            CHECK(ca.is_subset_of(extent_closure(k, sc)));
        }
    }
}

TEST_CASE("all_extents examples")
{
    CHECK(all_extents(make_scale(ScaleFamily::Contranominal, 3)).size() == 8);
    auto o4 = make_scale(ScaleFamily::Ordinal, 4);
    auto e = all_extents(o4);
    CHECK(masks(e) == std::set<Mask>{0b1, 0b11, 0b111, 0b1111});
    CHECK(all_extents(make_scale(ScaleFamily::Interordinal, 4)).size() == 11);
}

TEST_CASE("all_extents matches the intersection oracle and is lectic")
{
    std::mt19937 rng(5);
    for (int round = 0; round < 300; ++round) {
        auto g = 1 + rng() % 6, m = rng() % 7;
        auto k = oracle::random_context(rng, g, m, round % 2 ? 0.3 : 0.6);
        auto e = all_extents(k);
        CHECK(masks(e) == oracle::extents(k));
        CHECK(masks(e).size() == e.size());
        CHECK(e.is_closure_system());
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            CHECK(lectic_less(e.sets()[i], e.sets()[i + 1]));
        for (auto & x : e)
            CHECK(extent_closure(k, x) == x);
        // fixed points of the closure are exactly the listed extents
        for (Mask a = 0; a <= oracle::full_mask(g); ++a) {
            auto s = oracle::to_set(g, a);
            CHECK((extent_closure(k, s) == s) == e.contains(s));
        }
    }
}

TEST_CASE("induced_subcontext")
{
    std::mt19937 rng(3);
    auto k = oracle::random_context(rng, 4, 5);
    CHECK(induced_subcontext(k, k.all_objects(), k.all_attributes()) == k);

    auto n3 = make_scale(ScaleFamily::Nominal, 3);
    auto sub = induced_subcontext(n3, set(n3, {1, 2}), n3.all_attributes());
    CHECK(sub.object_count() == 2);
    CHECK(masks(all_extents(sub)) == std::set<Mask>{0, 0b01, 0b10, 0b11});

    auto i4 = make_scale(ScaleFamily::Interordinal, 4);
    auto sub2 = induced_subcontext(i4, set(i4, {2, 3}), i4.all_attributes());
    CHECK(sub2.objects() == std::vector<std::string>{"2", "3"});
    CHECK(masks(all_extents(sub2)) == std::set<Mask>{0, 0b01, 0b10, 0b11});

    auto part = induced_subcontext(n3, set(n3, {3, 1}), attrs(n3, {3}));
    CHECK(part.objects() == std::vector<std::string>{"1", "3"});
    CHECK(part.attributes() == std::vector<std::string>{"3"});
    CHECK(part.incident(1, 0));
    CHECK(! part.incident(0, 0));
}

TEST_CASE("extents of K[H, M] are the traces of Ext(K) on H")
{
    std::mt19937 rng(17);
    for (int round = 0; round < 100; ++round) {
        auto g = 1 + rng() % 6, m = rng() % 6;
        auto k = oracle::random_context(rng, g, m);
        Mask h = rng() & oracle::full_mask(g);
        if (h == 0)
            h = 1;
        auto hs = oracle::to_set(g, h);
        auto sub = induced_subcontext(k, hs, k.all_attributes());
        std::vector<std::size_t> members = hs.members();
        std::set<Mask> from_sub;
        for (auto & e : all_extents(sub)) {
            Mask lifted = 0;
            e.for_each([&](std::size_t i) { lifted |= Mask{1} << members[i]; });
            from_sub.insert(lifted);
        }
        std::set<Mask> traces;
        for (auto e : oracle::extents(k))
            traces.insert(e & h);
        CHECK(from_sub == traces);
    }
}

TEST_CASE("dual")
{
    auto n4 = make_scale(ScaleFamily::Nominal, 4);
    CHECK(dual(n4).incidence_matrix() == n4.incidence_matrix());

    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    auto d = dual(o3);
    CHECK(d.objects() == o3.attributes());
    CHECK(d.attributes() == o3.objects());
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t m = 0; m < 3; ++m)
            CHECK(d.incident(g, m) == (m <= g));

    std::mt19937 rng(9);
    auto k = oracle::random_context(rng, 4, 5);
    CHECK(dual(dual(k)) == k);
}

TEST_CASE("meet_irreducible_extents")
{
    auto check = [](const FormalContext & k, std::set<Mask> expected) {
        std::set<Mask> got;
        for (auto & e : meet_irreducible_extents(k))
            got.insert(oracle::to_mask(e));
        CHECK(got == expected);
    };
    check(make_scale(ScaleFamily::Contranominal, 3), {0b110, 0b101, 0b011});
    check(make_scale(ScaleFamily::Ordinal, 4), {0b1, 0b11, 0b111});
    check(make_scale(ScaleFamily::Nominal, 3), {0b1, 0b10, 0b100});

    // oracle: not the intersection of the strictly larger extents
    std::mt19937 rng(23);
    for (int round = 0; round < 100; ++round) {
        auto g = 1 + rng() % 6;
        auto k = oracle::random_context(rng, g, rng() % 6);
        auto ext = oracle::extents(k);
        std::set<Mask> expected;
        for (auto e : ext) {
            Mask meet = oracle::full_mask(g);
            bool any = false;
            for (auto f : ext)
                if ((e & f) == e && f != e) {
                    meet &= f;
                    any = true;
                }
            if (any && meet != e)
                expected.insert(e);
        }
        check(k, expected);
    }
}

TEST_CASE("index sets reject mixed universes")
{
    ObjectSet a(3), b(4);
    CHECK_THROWS_AS(a | b, std::invalid_argument);
    CHECK_THROWS_AS(a.insert(3), std::out_of_range);
}

TEST_CASE("format_objects")
{
    auto o3 = make_scale(ScaleFamily::Ordinal, 3);
    CHECK(format_objects(o3, set(o3, {1, 3})) == "{1, 3}");
    CHECK(format_objects(o3, o3.no_objects()) == "{}");
}
