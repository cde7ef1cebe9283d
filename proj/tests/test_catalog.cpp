#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "esscoh/catalog.hpp"
#include "esscoh/error.hpp"
#include "esscoh/morphism.hpp"
#include "support.hpp"

using namespace esscoh;

namespace {

std::vector<GroupSpec> sweep_specs() {
    std::vector<GroupSpec> out;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n = 1; n <= 4; ++n) {
            out.push_back({Family::A, p, n});
            out.push_back({Family::B, p, n});
            if (n >= 2) out.push_back({Family::C, p, n});
        }
    }
    for (Family f : {Family::D, Family::E, Family::F})
        for (int n = 3; n <= 4; ++n) out.push_back({f, 2, n});
    out.push_back({Family::E, 2, 5});
    return out;
}

std::vector<std::string> names_of(const std::vector<Element>& elems,
                                  const Presentation& P) {
    std::vector<std::string> out;
    for (const auto& e : elems) out.push_back(P.to_string(e));
    return out;
}

}  // namespace

TEST_CASE("spec validation and orders") {
    for (const auto& g : sweep_specs()) CHECK_NOTHROW(validate(g));

    CHECK_THROWS_AS(validate({Family::D, 3, 3}), DomainError);
    CHECK_THROWS_AS(validate({Family::E, 5, 3}), DomainError);
    CHECK_THROWS_AS(validate({Family::F, 3, 3}), DomainError);
    CHECK_THROWS_AS(validate({Family::E, 2, 2}), DomainError);
    CHECK_THROWS_AS(validate({Family::C, 3, 1}), DomainError);
    CHECK_THROWS_AS(validate({Family::A, 3, 0}), DomainError);
    CHECK_THROWS_AS(validate({Family::A, 4, 1}), DomainError);
    CHECK_THROWS_AS(validate({Family::B, 1, 1}), DomainError);

    CHECK(group_order({Family::A, 3, 2}) == 9);
    CHECK(group_order({Family::A, 2, 1}) == 2);
    CHECK(group_order({Family::B, 2, 1}) == 4);
    CHECK(group_order({Family::B, 3, 2}) == 27);
    CHECK(group_order({Family::C, 3, 2}) == 27);
    CHECK(group_order({Family::C, 5, 2}) == 125);
    CHECK(group_order({Family::D, 2, 3}) == 8);
    CHECK(group_order({Family::E, 2, 3}) == 8);
    CHECK(group_order({Family::E, 2, 4}) == 16);
    CHECK(group_order({Family::F, 2, 3}) == 16);

    CHECK(family_from_letter('c') == Family::C);
    CHECK(family_letter(Family::F) == 'F');
    CHECK(describe({Family::B, 3, 1}) == "B(p=3,n=1)");
    CHECK_THROWS_AS(family_from_letter('G'), DomainError);
}

TEST_CASE("presentation shapes") {
    SUBCASE("cyclic") {
        Presentation two = presentation_of({Family::A, 2, 1});
        REQUIRE(two.generators().size() == 1);
        CHECK(two.generators()[0].name == "x");
        CHECK_FALSE(two.parse("x^2").is_zero());
        for (int d = 0; d <= 8; ++d) CHECK(two.hilbert_dimension(d) == 1);

        Presentation four = presentation_of({Family::A, 2, 2});
        REQUIRE(four.generators().size() == 2);
        CHECK(four.parse("x^2").is_zero());
        for (int d = 0; d <= 8; ++d) CHECK(four.hilbert_dimension(d) == 1);

        Presentation nine = presentation_of({Family::A, 3, 2});
        CHECK(nine.parse("x^2").is_zero());
        CHECK_FALSE(nine.parse("y^3").is_zero());
    }

    SUBCASE("products of two cyclics") {
        Presentation klein = presentation_of({Family::B, 2, 1});
        REQUIRE(klein.generators().size() == 2);
        CHECK(klein.generators()[0].name == "x1");
        CHECK(klein.generators()[1].name == "x2");
        CHECK_FALSE(klein.parse("x1^2").is_zero());
        CHECK(klein.hilbert_dimension(3) == 4);

        Presentation odd = presentation_of({Family::B, 3, 1});
        std::vector<std::string> names;
        for (const auto& g : odd.generators()) names.push_back(g.name);
        CHECK(names == std::vector<std::string>{"x1", "y1", "x2", "y2"});
        CHECK(odd.generators()[1].degree == 2);
        CHECK(odd.parse("x1^2").is_zero());

        Presentation mixed = presentation_of({Family::B, 2, 2});
        REQUIRE(mixed.generators().size() == 3);
        CHECK(mixed.parse("x1^2").is_zero());
        CHECK_FALSE(mixed.parse("x2^2").is_zero());
        CHECK(mixed.hilbert_dimension(1) == 2);
        CHECK(mixed.hilbert_dimension(2) == 3);
    }

    SUBCASE("family C") {
        Presentation odd = presentation_of({Family::C, 3, 2});
        std::vector<std::pair<std::string, int>> got;
        for (const auto& g : odd.generators()) got.emplace_back(g.name, g.degree);
        std::vector<std::pair<std::string, int>> want = {
            {"a1", 1}, {"a2", 3}, {"b", 1}, {"y", 2}, {"v", 5}, {"w", 6}};
        CHECK(got == want);
        CHECK(odd.parse("a1*a2").is_zero());
        CHECK(odd.parse("a1*y").is_zero());
        CHECK_FALSE(odd.parse("v*y").is_zero());

        Presentation five = presentation_of({Family::C, 5, 2});
        CHECK(five.generators().size() == 8);
        CHECK(five.relation_texts().size() == 14);
        CHECK(five.parse("a2*a4").is_zero());

        Presentation even = presentation_of({Family::C, 2, 3});
        CHECK(even.parse("a^2").is_zero());
        CHECK(even.parse("a*b^2").is_zero());
        CHECK_FALSE(even.parse("a*b").is_zero());
        CHECK(even.hilbert_dimension(2) == 2);
        CHECK(even.hilbert_dimension(3) == 2);

        // at n = 2 the group is dihedral of order 8, so the ring collapses
        Presentation small = presentation_of({Family::C, 2, 2});
        std::vector<std::pair<std::string, int>> small_got;
        for (const auto& g : small.generators())
            small_got.emplace_back(g.name, g.degree);
        std::vector<std::pair<std::string, int>> small_want = {
            {"a", 1}, {"b", 1}, {"w", 2}};
        CHECK(small_got == small_want);
        CHECK(small.parse("a*b").is_zero());
        CHECK_FALSE(small.parse("a^2").is_zero());
        for (int d = 0; d <= 6; ++d)
            CHECK(small.hilbert_dimension(d) == std::size_t(d) + 1);
    }

    SUBCASE("dihedral, quaternion, semidihedral") {
        Presentation dihedral = presentation_of({Family::D, 2, 3});
        CHECK(dihedral.parse("x*y").is_zero());
        CHECK(dihedral.hilbert_dimension(2) == 3);
        CHECK(dihedral.hilbert_dimension(3) == 4);

        Presentation quat8 = presentation_of({Family::E, 2, 3});
        const std::size_t dims8[] = {1, 2, 2, 1, 1, 2, 2, 1, 1};
        for (int d = 0; d <= 8; ++d) CHECK(quat8.hilbert_dimension(d) == dims8[d]);
        CHECK(quat8.parse("x^3").is_zero());

        Presentation quat16 = presentation_of({Family::E, 2, 4});
        for (int d = 0; d <= 8; ++d) CHECK(quat16.hilbert_dimension(d) == dims8[d]);
        CHECK(quat16.parse("x*y").is_zero());
        CHECK_FALSE(quat16.parse("x^3").is_zero());
        CHECK(quat16.parse("x^3 + y^3").is_zero());
        CHECK(quat16.parse("x^4").is_zero());

        Presentation semi = presentation_of({Family::F, 2, 3});
        CHECK(semi.parse("b^2").is_zero());
        CHECK(semi.parse("a^2 + a*b").is_zero());
        CHECK_FALSE(semi.parse("a*b").is_zero());
        CHECK(semi.hilbert_dimension(1) == 2);
        CHECK(semi.hilbert_dimension(2) == 2);
    }

    SUBCASE("degree one has rank one for cyclic groups and two otherwise") {
        for (const auto& g : sweep_specs()) {
            Presentation ring = presentation_of(g);
            const std::size_t want = (g.family == Family::A) ? 1 : 2;
            CHECK_MESSAGE(ring.hilbert_dimension(1) == want, describe(g));
        }
    }
}

TEST_CASE("subgroup data layout") {
    SUBCASE("route markers") {
        for (const auto& g : sweep_specs()) {
            Presentation ring = presentation_of(g);
            MaximalSubgroupData data = maximal_subgroup_data(g, ring);
            const bool expect_h1_only =
                (g.p == 2) && (g.family == Family::D || g.family == Family::F ||
                               g.family == Family::C ||
                               (g.family == Family::B && g.n >= 2));
            CHECK_MESSAGE(data.h1_only == expect_h1_only, describe(g));
            CHECK(data.subgroups.empty() == data.h1_only);
        }
    }

    SUBCASE("labels and counts") {
        auto labels = [](const MaximalSubgroupData& data) {
            std::vector<std::string> out;
            for (const auto& s : data.subgroups) out.push_back(s.label);
            return out;
        };
        {
            Presentation ring = presentation_of({Family::A, 5, 1});
            auto data = maximal_subgroup_data({Family::A, 5, 1}, ring);
            CHECK(labels(data) == std::vector<std::string>{"1"});
            CHECK(data.subgroups[0].target->generators().empty());
        }
        {
            Presentation ring = presentation_of({Family::A, 3, 2});
            auto data = maximal_subgroup_data({Family::A, 3, 2}, ring);
            CHECK(labels(data) == std::vector<std::string>{"H"});
        }
        {
            Presentation ring = presentation_of({Family::B, 3, 1});
            auto data = maximal_subgroup_data({Family::B, 3, 1}, ring);
            CHECK(labels(data) == std::vector<std::string>{"M(0:1)", "M(1:0)",
                                                           "M(1:1)", "M(1:2)"});
        }
        {
            Presentation ring = presentation_of({Family::B, 2, 1});
            auto data = maximal_subgroup_data({Family::B, 2, 1}, ring);
            CHECK(labels(data).size() == 3);
        }
        {
            Presentation ring = presentation_of({Family::B, 3, 2});
            auto data = maximal_subgroup_data({Family::B, 3, 2}, ring);
            CHECK(labels(data) == std::vector<std::string>{"T", "K", "M1", "M2"});
        }
        {
            Presentation ring = presentation_of({Family::C, 3, 2});
            auto data = maximal_subgroup_data({Family::C, 3, 2}, ring);
            CHECK(labels(data) == std::vector<std::string>{"K", "M0", "M1", "M2"});
            CHECK(data.subgroups[1].knobs.empty());     // M0 scalars are pinned
            CHECK(data.subgroups[2].knobs.size() == 3); // c2, cv, cw
        }
        {
            Presentation ring = presentation_of({Family::E, 2, 3});
            auto data = maximal_subgroup_data({Family::E, 2, 3}, ring);
            CHECK(labels(data) == std::vector<std::string>{"t", "s", "ts"});
        }
        {
            Presentation ring = presentation_of({Family::E, 2, 4});
            auto data = maximal_subgroup_data({Family::E, 2, 4}, ring);
            CHECK(labels(data) == std::vector<std::string>{"C", "H", "K"});
        }
    }

    SUBCASE("quaternion image choices") {
        Presentation r16 = presentation_of({Family::E, 2, 4});
        auto d16 = maximal_subgroup_data({Family::E, 2, 4}, r16);
        const auto& h16 = d16.subgroups[1];
        REQUIRE(h16.choices.size() == 1);
        CHECK(h16.choices[0].name == "bH");
        CHECK(names_of(h16.choices[0].candidates, *h16.target) ==
              std::vector<std::string>{"y", "x + y", "x"});

        Presentation r32 = presentation_of({Family::E, 2, 5});
        auto d32 = maximal_subgroup_data({Family::E, 2, 5}, r32);
        const auto& h32 = d32.subgroups[1];
        REQUIRE(h32.choices.size() == 1);
        CHECK(names_of(h32.choices[0].candidates, *h32.target) ==
              std::vector<std::string>{"x + y"});
    }

    SUBCASE("ring mismatch is rejected") {
        Presentation wrong = presentation_of({Family::D, 2, 3});
        CHECK_THROWS(maximal_subgroup_data({Family::E, 2, 3}, wrong));
    }
}

TEST_CASE("every restriction map is well defined, for all scalar values") {
    testsupport::Rng rng(0x5eed5eedULL);
    for (const auto& g : sweep_specs()) {
        Presentation ring = presentation_of(g);
        MaximalSubgroupData data = maximal_subgroup_data(g, ring);
        for (const auto& datum : data.subgroups) {
            CAPTURE(describe(g));
            CAPTURE(datum.label);
            CHECK(check_well_defined(datum.restriction).empty());
            for (int round = 0; round < 3; ++round) {
                std::map<std::string, std::uint32_t> knob_values;
                for (const auto& slot : datum.knobs)
                    knob_values[slot.name] =
                        static_cast<std::uint32_t>(rng.below(g.p));
                for (std::size_t pick = 0;; ++pick) {
                    std::map<std::string, std::size_t> picks;
                    bool in_range = (pick == 0);
                    for (const auto& slot : datum.choices)
                        if (pick < slot.candidates.size()) {
                            picks[slot.name] = pick;
                            in_range = true;
                        }
                    if (!in_range) break;
                    AlgebraMorphism varied =
                        restriction_with(datum, ring, knob_values, picks);
                    CHECK(check_well_defined(varied).empty());
                    if (datum.choices.empty()) break;
                }
            }
        }
    }
}

TEST_CASE("restriction values") {
    SUBCASE("cyclic tower") {
        Presentation ring = presentation_of({Family::A, 2, 2});
        auto data = maximal_subgroup_data({Family::A, 2, 2}, ring);
        const auto& res = data.subgroups[0].restriction;
        CHECK(apply(res, ring.parse("x")).is_zero());
        CHECK(apply(res, ring.parse("y")) == data.subgroups[0].target->parse("x^2"));

        Presentation big = presentation_of({Family::A, 3, 3});
        auto bigdata = maximal_subgroup_data({Family::A, 3, 3}, big);
        const auto& bigres = bigdata.subgroups[0].restriction;
        CHECK(apply(bigres, big.parse("y^2")) ==
              bigdata.subgroups[0].target->parse("y^2"));
    }

    SUBCASE("degree-one kernels over the four-group match the dual classes") {
        Presentation ring = presentation_of({Family::B, 2, 1});
        auto data = maximal_subgroup_data({Family::B, 2, 1}, ring);
        REQUIRE(data.subgroups.size() == 3);
        std::vector<GradedSubspaceFamily> kernels;
        for (const auto& s : data.subgroups)
            kernels.push_back(kernel_family(s.restriction, 3));
        CHECK(kernels[0].slices.at(1).contains(ring.coordinates(ring.parse("x1"), 1)));
        CHECK(kernels[1].slices.at(1).contains(ring.coordinates(ring.parse("x2"), 1)));
        CHECK(kernels[2].slices.at(1).contains(
            ring.coordinates(ring.parse("x1 + x2"), 1)));

        GradedSubspaceFamily meet = intersect_graded(kernels, 3);
        CHECK(meet.slices.at(1).dim() == 0);
        CHECK(meet.slices.at(2).dim() == 0);
        CHECK(meet.slices.at(3).dim() == 1);
        CHECK(meet.slices.at(3).contains(
            ring.coordinates(ring.parse("x1^2*x2 + x1*x2^2"), 3)));
    }

    SUBCASE("expected essential classes die on every subgroup, any scalars") {
        testsupport::Rng rng(99);
        const GroupSpec g{Family::C, 3, 2};
        Presentation ring = presentation_of(g);
        IdealSpec expected = expected_essential(g, ring);
        auto data = maximal_subgroup_data(g, ring);
        for (const auto& datum : data.subgroups) {
            for (int round = 0; round < 4; ++round) {
                std::map<std::string, std::uint32_t> knob_values;
                for (const auto& slot : datum.knobs)
                    knob_values[slot.name] =
                        static_cast<std::uint32_t>(rng.below(3));
                AlgebraMorphism res = restriction_with(datum, ring, knob_values, {});
                for (const auto& gen : expected.generators)
                    CHECK(apply(res, gen).is_zero());
            }
        }
    }
}

TEST_CASE("scalar overrides") {
    const GroupSpec g{Family::C, 3, 2};
    Presentation ring = presentation_of(g);
    auto data = maximal_subgroup_data(g, ring);
    const auto& m1 = data.subgroups[2];
    REQUIRE(m1.label == "M1");
    const Presentation& target = *m1.target;

    AlgebraMorphism scaled = restriction_with(m1, ring, {{"cv", 2}}, {});
    const std::size_t v_index = ring.generator_index("v");
    CHECK(scaled.images[v_index] == target.parse("2*y^2*x"));

    AlgebraMorphism killed = restriction_with(m1, ring, {{"c2", 0}}, {});
    CHECK(killed.images[ring.generator_index("a2")].is_zero());

    CHECK_THROWS_AS(restriction_with(m1, ring, {{"nope", 1}}, {}),
                    DomainError);
    CHECK_THROWS_AS(restriction_with(m1, ring, {}, {{"cv", 0}}), DomainError);

    Presentation quat = presentation_of({Family::E, 2, 4});
    auto qdata = maximal_subgroup_data({Family::E, 2, 4}, quat);
    const auto& h = qdata.subgroups[1];
    CHECK_THROWS_AS(restriction_with(h, quat, {}, {{"bH", 7}}), DomainError);
    AlgebraMorphism picked = restriction_with(h, quat, {}, {{"bH", 1}});
    CHECK(picked.images[1] == h.target->parse("x + y"));
}

TEST_CASE("expected essential ideals") {
    {
        const GroupSpec g{Family::D, 2, 3};
        Presentation ring = presentation_of(g);
        CHECK(expected_essential(g, ring).generators.empty());
    }
    {
        const GroupSpec g{Family::E, 2, 3};
        Presentation ring = presentation_of(g);
        CHECK(expected_essential(g, ring).generators ==
              std::vector<Element>{ring.parse("x^2"), ring.parse("y^2")});
    }
    {
        const GroupSpec g{Family::E, 2, 4};
        Presentation ring = presentation_of(g);
        const auto gens = expected_essential(g, ring).generators;
        CHECK(gens == std::vector<Element>{ring.parse("x^3")});
        CHECK(gens == std::vector<Element>{ring.parse("y^3")});
    }
    {
        const GroupSpec g{Family::A, 3, 1};
        Presentation ring = presentation_of(g);
        CHECK(names_of(expected_essential(g, ring).generators, ring) ==
              std::vector<std::string>{"x", "y"});
    }
    {
        const GroupSpec g{Family::A, 2, 1};
        Presentation ring = presentation_of(g);
        CHECK(names_of(expected_essential(g, ring).generators, ring) ==
              std::vector<std::string>{"x"});
    }
    {
        const GroupSpec g{Family::B, 3, 1};
        Presentation ring = presentation_of(g);
        const auto ideal = expected_essential(g, ring);
        REQUIRE(ideal.generators.size() == 4);
        std::vector<int> degrees;
        for (const auto& e : ideal.generators)
            degrees.push_back(ring.degree_of(e));
        CHECK(degrees == std::vector<int>{2, 3, 7, 8});
    }
    {
        const GroupSpec g{Family::C, 5, 2};
        Presentation ring = presentation_of(g);
        CHECK(expected_essential(g, ring).generators.size() == 6);
    }
    {
        const GroupSpec g{Family::C, 2, 3};
        Presentation ring = presentation_of(g);
        CHECK(names_of(expected_essential(g, ring).generators, ring) ==
              std::vector<std::string>{"a*b"});
    }
    {
        // dihedral boundary: the named class is zero, so the ideal is zero
        const GroupSpec g{Family::C, 2, 2};
        Presentation ring = presentation_of(g);
        CHECK(ring.parse("a*b").is_zero());
        CHECK(expected_essential(g, ring).generators.empty());
    }
    {
        const GroupSpec g{Family::F, 2, 4};
        Presentation ring = presentation_of(g);
        CHECK(names_of(expected_essential(g, ring).generators, ring) ==
              std::vector<std::string>{"a*b"});
    }
    for (const auto& g : sweep_specs()) {
        Presentation ring = presentation_of(g);
        for (const auto& e : expected_essential(g, ring).generators) {
            CHECK_FALSE(e.is_zero());
            CHECK(ring.is_homogeneous(e));
        }
    }
}

TEST_CASE("degree-one class enumeration") {
    {
        Presentation ring = presentation_of({Family::E, 2, 3});
        CHECK(names_of(h1_classes(ring), ring) ==
              std::vector<std::string>{"x", "y", "x + y"});
    }
    {
        Presentation ring = presentation_of({Family::B, 2, 2});
        CHECK(names_of(h1_classes(ring), ring) ==
              std::vector<std::string>{"x1", "x2", "x1 + x2"});
    }
    {
        Presentation ring = presentation_of({Family::A, 2, 2});
        CHECK(names_of(h1_classes(ring), ring) ==
              std::vector<std::string>{"x"});
    }
    {
        Presentation ring = presentation_of({Family::A, 3, 1});
        CHECK_THROWS_AS(h1_classes(ring), DomainError);
    }
}

TEST_CASE("standard operations on the rank-two elementary abelian ring") {
    {
        Presentation ring = presentation_of({Family::B, 3, 1});
        SteenrodAction act = elementary_abelian_action(ring);
        CHECK(bockstein(act, ring.parse("x1")) == ring.parse("y1"));
        CHECK(bockstein(act, ring.parse("y2")).is_zero());
        CHECK(power_p1(act, ring.parse("y1")) == ring.parse("y1^3"));
        CHECK(power_p1(act, ring.parse("x2")).is_zero());
    }
    {
        Presentation ring = presentation_of({Family::B, 2, 1});
        SteenrodAction act = elementary_abelian_action(ring);
        CHECK(bockstein(act, ring.parse("x1")) == ring.parse("x1^2"));
        CHECK_FALSE(has_power_operation(act));
    }
    {
        Presentation ring = presentation_of({Family::D, 2, 3});
        CHECK_THROWS_AS(elementary_abelian_action(ring), DomainError);
    }
}
