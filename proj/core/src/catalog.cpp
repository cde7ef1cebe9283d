#include "esscoh/catalog.hpp"

#include <utility>

#include "esscoh/error.hpp"
#include "esscoh/fp_linalg.hpp"

namespace esscoh {

namespace {

std::string letter_of(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
    }
    throw DomainError("unknown family");
}

std::uint64_t power_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base) throw DomainError("group order overflows");
        out *= base;
    }
    return out;
}

// Lambda[x] (x) k[y] for a cyclic group of order p^n > 2; k[x] for order 2.
Presentation cyclic_ring(std::uint32_t p, int n) {
    if (p == 2 && n == 1) return Presentation(2, {{"x", 1, false}}, {});
    return Presentation(p, {{"x", 1, p == 2}, {"y", 2, false}}, {});
}

Presentation family_b_ring(std::uint32_t p, int n) {
    return Presentation::kunneth_product(cyclic_ring(p, n), cyclic_ring(p, 1));
}

Presentation family_c_ring(std::uint32_t p, int n) {
    if (p == 2) {
        // n = 2 collapses: t has order 4, so s t s = t^3 = t^-1 and the group
        // is the dihedral one of order 8. Its ring carries a polynomial class
        // in degree 2 and the two degree-1 classes multiply to zero.
        if (n == 2)
            return Presentation(2, {{"a", 1}, {"b", 1}, {"w", 2}}, {"a*b"});
        return Presentation(
            2,
            {{"a", 1}, {"b", 1}, {"v", 3}, {"w", 4}},
            {"a^2", "v^2", "a*v", "a*b^2"});
    }
    std::vector<GeneratorDecl> gens;
    for (std::uint32_t i = 1; i < p; ++i)
        gens.push_back({"a" + std::to_string(i), 2 * static_cast<int>(i) - 1});
    gens.push_back({"b", 1});
    gens.push_back({"y", 2});
    gens.push_back({"v", 2 * static_cast<int>(p) - 1});
    gens.push_back({"w", 2 * static_cast<int>(p)});
    std::vector<std::string> rels;
    for (std::uint32_t i = 1; i < p; ++i) {
        const std::string ai = "a" + std::to_string(i);
        for (std::uint32_t j = i + 1; j < p; ++j)
            rels.push_back(ai + "*a" + std::to_string(j));
        rels.push_back(ai + "*v");
        rels.push_back(ai + "*y");
    }
    return Presentation(p, std::move(gens), rels);
}

Presentation quaternion_ring(int n) {
    if (n == 3)
        return Presentation(
            2, {{"x", 1}, {"y", 1}, {"z", 4}},
            {"x^2 + x*y + y^2", "x^2*y + x*y^2"});
    return Presentation(
        2, {{"x", 1}, {"y", 1}, {"z", 4}}, {"x*y", "x^3 + y^3"});
}

std::vector<Element> parse_all(const Presentation& P,
                               const std::vector<std::string>& texts) {
    std::vector<Element> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(P.parse(t));
    return out;
}

SubgroupDatum make_datum(std::string label, const Presentation& ring,
                         std::unique_ptr<const Presentation> target,
                         const std::vector<std::string>& image_texts,
                         std::vector<KnobSlot> knobs = {},
                         std::vector<ChoiceSlot> choices = {}) {
    auto images = parse_all(*target, image_texts);
    for (const auto& slot : choices) images[slot.generator] = slot.candidates.at(0);
    auto restriction = make_morphism(ring, *target, std::move(images));
    return SubgroupDatum{std::move(label), std::move(target),
                         std::move(restriction), std::move(knobs),
                         std::move(choices)};
}

MaximalSubgroupData family_a_data(const GroupSpec& g, const Presentation& ring) {
    MaximalSubgroupData data;
    if (g.n == 1) {
        auto target = std::make_unique<const Presentation>(
            Presentation(g.p, {}, {}));
        std::vector<Element> images(ring.generators().size(), target->zero());
        auto restriction = make_morphism(ring, *target, std::move(images));
        data.subgroups.push_back(
            {"1", std::move(target), std::move(restriction), {}, {}});
        return data;
    }
    auto target = std::make_unique<const Presentation>(cyclic_ring(g.p, g.n - 1));
    const std::string y_image = (g.p == 2 && g.n == 2) ? "x^2" : "y";
    data.subgroups.push_back(
        make_datum("H", ring, std::move(target), {"0", y_image}));
    return data;
}

MaximalSubgroupData family_b_data(const GroupSpec& g, const Presentation& ring) {
    MaximalSubgroupData data;
    if (g.n == 1) {
        // the p + 1 index-p subgroups of the rank-two elementary abelian group
        std::vector<std::pair<std::uint32_t, std::uint32_t>> lines;
        lines.emplace_back(0, 1);
        for (std::uint32_t b = 0; b < g.p; ++b) lines.emplace_back(1, b);
        for (auto [a, b] : lines) {
            auto target = std::make_unique<const Presentation>(cyclic_ring(g.p, 1));
            const std::string as = std::to_string(a);
            const std::string bs = std::to_string(b);
            std::vector<std::string> images;
            if (g.p == 2) {
                images = {as + "*x", bs + "*x"};
            } else {
                images = {as + "*x", as + "*y", bs + "*x", bs + "*y"};
            }
            data.subgroups.push_back(make_datum(
                "M(" + as + ":" + bs + ")", ring, std::move(target), images));
        }
        return data;
    }
    if (g.p == 2) {
        data.h1_only = true;
        return data;
    }
    auto big = std::make_unique<const Presentation>(cyclic_ring(g.p, g.n));
    data.subgroups.push_back(
        make_datum("T", ring, std::move(big), {"x", "y", "0", "0"}));
    auto split = std::make_unique<const Presentation>(family_b_ring(g.p, g.n - 1));
    data.subgroups.push_back(
        make_datum("K", ring, std::move(split), {"0", "y1", "x2", "y2"}));
    for (std::uint32_t i = 1; i < g.p; ++i) {
        auto target = std::make_unique<const Presentation>(cyclic_ring(g.p, g.n));
        data.subgroups.push_back(make_datum(
            "M" + std::to_string(i), ring, std::move(target),
            {"x", "0", std::to_string(i) + "*x", "0"}));
    }
    return data;
}

MaximalSubgroupData family_c_data(const GroupSpec& g, const Presentation& ring) {
    MaximalSubgroupData data;
    if (g.p == 2) {
        data.h1_only = true;
        return data;
    }
    const auto& gens = ring.generators();
    const std::size_t count = gens.size();
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < count; ++i)
            if (gens[i].name == name) return i;
        throw DomainError("generator missing from family C ring");
    };

    {
        auto target = std::make_unique<const Presentation>(
            family_b_ring(g.p, g.n - 1));
        std::vector<std::string> images(count, "0");
        images[index_of("b")] = "x2";
        images[index_of("y")] = "y2";
        images[index_of("w")] = "y1^" + std::to_string(g.p);
        data.subgroups.push_back(make_datum("K", ring, std::move(target), images));
    }

    const std::string ps = std::to_string(g.p);
    for (std::uint32_t i = 0; i < g.p; ++i) {
        auto target = std::make_unique<const Presentation>(cyclic_ring(g.p, g.n));
        std::vector<std::string> images(count, "0");
        images[index_of("b")] = std::to_string(i) + "*x";
        images[index_of("a1")] = "x";
        for (std::uint32_t j = 2; j < g.p; ++j)
            images[index_of("a" + std::to_string(j))] =
                "y^" + std::to_string(j - 1) + "*x";
        images[index_of("v")] = "y^" + std::to_string(g.p - 1) + "*x";
        images[index_of("w")] = "y^" + ps;
        std::vector<KnobSlot> knobs;
        if (i > 0) {
            // undetermined scalars, invisible to the essential ideal
            for (std::uint32_t j = 2; j < g.p; ++j) {
                const std::size_t gen = index_of("a" + std::to_string(j));
                knobs.push_back({"c" + std::to_string(j), gen,
                                 target->parse(images[gen])});
            }
            knobs.push_back({"cv", index_of("v"), target->parse(images[index_of("v")])});
            knobs.push_back({"cw", index_of("w"), target->parse(images[index_of("w")])});
        }
        data.subgroups.push_back(make_datum("M" + std::to_string(i), ring,
                                            std::move(target), images,
                                            std::move(knobs)));
    }
    return data;
}

MaximalSubgroupData family_e_data(const GroupSpec& g, const Presentation& ring) {
    MaximalSubgroupData data;
    if (g.n == 3) {
        // the three cyclic subgroups of order 4
        const std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
            {"t", {"x", "0", "y^2"}},
            {"s", {"0", "x", "y^2"}},
            {"ts", {"x", "x", "y^2"}},
        };
        for (const auto& [label, images] : rows) {
            auto target = std::make_unique<const Presentation>(cyclic_ring(2, 2));
            data.subgroups.push_back(
                make_datum(label, ring, std::move(target), images));
        }
        return data;
    }

    {
        auto target = std::make_unique<const Presentation>(
            cyclic_ring(2, g.n - 1));
        data.subgroups.push_back(
            make_datum("C", ring, std::move(target), {"x", "x", "y^2"}));
    }

    // the degree-1 image of y on the quaternion subgroup is only pinned down
    // up to the admissible classes; the cube must vanish for x^3 + y^3 to map
    // to zero
    {
        auto target = std::make_unique<const Presentation>(quaternion_ring(g.n - 1));
        std::vector<Element> candidates;
        for (const char* text : {"y", "x + y", "x"}) {
            Element c = target->parse(text);
            if (target->power(c, 3).is_zero()) candidates.push_back(c);
        }
        if (candidates.empty())
            throw DomainError("no admissible degree-one image on the quaternion subgroup");
        std::vector<ChoiceSlot> choices;
        choices.push_back({"bH", 1, std::move(candidates)});
        data.subgroups.push_back(make_datum("H", ring, std::move(target),
                                            {"0", "0", "z"}, {},
                                            std::move(choices)));
    }

    {
        auto target = std::make_unique<const Presentation>(quaternion_ring(g.n - 1));
        data.subgroups.push_back(
            make_datum("K", ring, std::move(target), {"x + y", "0", "z"}));
    }
    return data;
}

}  // namespace

Family family_from_letter(char letter) {
    switch (letter) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        case 'E': case 'e': return Family::E;
        case 'F': case 'f': return Family::F;
        default:
            throw DomainError(std::string("unknown family letter '") + letter + "'");
    }
}

char family_letter(Family f) { return letter_of(f)[0]; }

std::string describe(const GroupSpec& g) {
    return letter_of(g.family) + "(p=" + std::to_string(g.p) +
           ",n=" + std::to_string(g.n) + ")";
}

void validate(const GroupSpec& g) {
    PrimeField field(g.p);  // rejects non-primes
    switch (g.family) {
        case Family::A:
        case Family::B:
            if (g.n < 1)
                throw DomainError(describe(g) + ": n must be at least 1");
            break;
        case Family::C:
            if (g.n < 2)
                throw DomainError(describe(g) + ": n must be at least 2");
            break;
        case Family::D:
        case Family::E:
        case Family::F:
            if (g.p != 2)
                throw DomainError(describe(g) + ": family requires p = 2");
            if (g.n < 3)
                throw DomainError(describe(g) + ": n must be at least 3");
            break;
    }
}

std::uint64_t group_order(const GroupSpec& g) {
    validate(g);
    switch (g.family) {
        case Family::A: return power_u64(g.p, g.n);
        case Family::B:
        case Family::C:
        case Family::F: return power_u64(g.p, g.n + 1);
        case Family::D:
        case Family::E: return power_u64(2, g.n);
    }
    throw DomainError("unknown family");
}

Presentation presentation_of(const GroupSpec& g) {
    validate(g);
    switch (g.family) {
        case Family::A:
            return cyclic_ring(g.p, g.n);
        case Family::B:
            return family_b_ring(g.p, g.n);
        case Family::C:
            return family_c_ring(g.p, g.n);
        case Family::D:
            return Presentation(2, {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
        case Family::E:
            return quaternion_ring(g.n);
        case Family::F:
            return Presentation(
                2, {{"a", 1}, {"b", 1}, {"y", 2}, {"v", 3}, {"w", 4}},
                {"a*y", "a*v", "b^2", "a^2 + a*b", "v^2 + w*a*b + v*y*b"});
    }
    throw DomainError("unknown family");
}

MaximalSubgroupData maximal_subgroup_data(const GroupSpec& g,
                                          const Presentation& ring) {
    validate(g);
    switch (g.family) {
        case Family::A: return family_a_data(g, ring);
        case Family::B: return family_b_data(g, ring);
        case Family::C: return family_c_data(g, ring);
        case Family::E: return family_e_data(g, ring);
        case Family::D:
        case Family::F: {
            MaximalSubgroupData data;
            data.h1_only = true;
            return data;
        }
    }
    throw DomainError("unknown family");
}

AlgebraMorphism restriction_with(
    const SubgroupDatum& datum, const Presentation& ring,
    const std::map<std::string, std::uint32_t>& knob_values,
    const std::map<std::string, std::size_t>& choice_picks) {
    const Presentation& target = *datum.target;
    std::vector<Element> images = datum.restriction.images;

    auto has_knob = [&](const std::string& name) {
        for (const auto& slot : datum.knobs)
            if (slot.name == name) return true;
        return false;
    };
    auto has_choice = [&](const std::string& name) {
        for (const auto& slot : datum.choices)
            if (slot.name == name) return true;
        return false;
    };
    for (const auto& [name, value] : knob_values) {
        (void)value;
        if (!has_knob(name))
            throw DomainError("subgroup " + datum.label + " has no knob '" +
                              name + "'");
    }
    for (const auto& [name, pick] : choice_picks) {
        (void)pick;
        if (!has_choice(name))
            throw DomainError("subgroup " + datum.label + " has no choice '" +
                              name + "'");
    }

    for (const auto& slot : datum.knobs) {
        auto it = knob_values.find(slot.name);
        if (it == knob_values.end()) continue;
        images[slot.generator] = target.scale(it->second, slot.unit_image);
    }
    for (const auto& slot : datum.choices) {
        auto it = choice_picks.find(slot.name);
        if (it == choice_picks.end()) continue;
        if (it->second >= slot.candidates.size())
            throw DomainError("choice '" + slot.name + "' has only " +
                              std::to_string(slot.candidates.size()) +
                              " candidates");
        images[slot.generator] = slot.candidates[it->second];
    }
    return make_morphism(ring, target, std::move(images));
}

IdealSpec expected_essential(const GroupSpec& g, const Presentation& ring) {
    validate(g);
    std::vector<std::string> texts;
    const std::string ps = std::to_string(g.p);
    switch (g.family) {
        case Family::A:
            if (g.n == 1 && g.p != 2)
                texts = {"x", "y"};
            else
                texts = {"x"};
            break;
        case Family::B:
            if (g.p == 2) {
                texts = (g.n == 1)
                            ? std::vector<std::string>{"x1^2*x2 + x1*x2^2"}
                            : std::vector<std::string>{"x1*x2"};
            } else if (g.n == 1) {
                texts = {"x1*x2", "x1*y2 - x2*y1",
                         "x1*y2^" + ps + " - x2*y1^" + ps,
                         "y1^" + ps + "*y2 - y1*y2^" + ps};
            } else {
                texts = {"x1*x2", "x1*y2"};
            }
            break;
        case Family::C:
            if (g.p == 2) {
                texts = {"a*b"};
            } else {
                for (std::uint32_t i = 1; i < g.p; ++i)
                    texts.push_back("a" + std::to_string(i) + "*b");
                texts.push_back("v*b");
                texts.push_back("v*y");
            }
            break;
        case Family::D:
            texts = {};
            break;
        case Family::E:
            texts = (g.n == 3) ? std::vector<std::string>{"x^2", "y^2"}
                               : std::vector<std::string>{"x^3"};
            break;
        case Family::F:
            texts = {"a*b"};
            break;
    }
    std::vector<Element> parsed = parse_all(ring, texts);
    // a listed class can die in a boundary ring (a*b = 0 in the dihedral
    // case of family C); the ideal it generates is then the zero ideal
    std::erase_if(parsed, [](const Element& e) { return e.is_zero(); });
    return make_ideal(ring, std::move(parsed));
}

std::vector<Element> h1_classes(const Presentation& P) {
    if (P.p() != 2)
        throw DomainError("degree-one class enumeration needs p = 2");
    const std::size_t m = P.degree_basis(1).representatives.size();
    if (m >= 20) throw DomainError("too many degree-one classes");
    std::vector<Element> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint32_t> coords(m, 0);
        for (std::size_t k = 0; k < m; ++k) coords[k] = (mask >> k) & 1;
        out.push_back(P.from_coordinates(1, coords));
    }
    return out;
}

SteenrodAction elementary_abelian_action(const Presentation& ring) {
    const auto& gens = ring.generators();
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return i;
        throw DomainError("ring is not the rank-two elementary abelian one");
    };
    const std::uint32_t p = ring.p();
    std::vector<Element> beta(gens.size(), ring.zero());
    if (p == 2) {
        if (gens.size() != 2)
            throw DomainError("ring is not the rank-two elementary abelian one");
        beta[index_of("x1")] = ring.parse("x1^2");
        beta[index_of("x2")] = ring.parse("x2^2");
        return make_steenrod_action(ring, std::move(beta), {});
    }
    if (gens.size() != 4)
        throw DomainError("ring is not the rank-two elementary abelian one");
    std::vector<Element> p1(gens.size(), ring.zero());
    const std::string ps = std::to_string(p);
    for (const char* i : {"1", "2"}) {
        const std::string x = std::string("x") + i;
        const std::string y = std::string("y") + i;
        beta[index_of(x)] = ring.parse(y);
        p1[index_of(y)] = ring.parse(y + "^" + ps);
    }
    return make_steenrod_action(ring, std::move(beta), std::move(p1));
}

}  // namespace esscoh
