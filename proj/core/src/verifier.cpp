#include "esscoh/verifier.hpp"

#include <cstdint>

#include "esscoh/error.hpp"
#include "esscoh/morphism.hpp"

namespace esscoh {

namespace {

// splitmix64 with a fixed seed: the scalar rounds must be reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct Overrides {
    std::vector<std::map<std::string, std::uint32_t>> knobs;  // per subgroup
    std::vector<std::map<std::string, std::size_t>> picks;    // per subgroup
};

GradedSubspaceFamily intersect_kernels(const Presentation& ring,
                                       const MaximalSubgroupData& data,
                                       int max_degree, const Overrides* ov) {
    std::vector<GradedSubspaceFamily> families;
    families.reserve(data.subgroups.size());
    for (std::size_t i = 0; i < data.subgroups.size(); ++i) {
        const SubgroupDatum& datum = data.subgroups[i];
        if (ov && (!ov->knobs[i].empty() || !ov->picks[i].empty())) {
            AlgebraMorphism varied =
                restriction_with(datum, ring, ov->knobs[i], ov->picks[i]);
            families.push_back(kernel_family(varied, max_degree));
        } else {
            families.push_back(kernel_family(datum.restriction, max_degree));
        }
    }
    return intersect_graded(families, max_degree);
}

}  // namespace

Method method_from_name(const std::string& name) {
    if (name == "kernels") return Method::Kernels;
    if (name == "h1") return Method::H1;
    if (name == "both" || name == "auto") return Method::Both;
    throw DomainError("unknown method '" + name +
                      "' (expected kernels, h1, or both)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Kernels: return "kernels";
        case Method::H1: return "h1";
        case Method::Both: return "both";
    }
    throw DomainError("unknown method");
}

GradedSubspaceFamily essential_by_kernels(const GroupSpec& g,
                                          const Presentation& ring,
                                          int max_degree) {
    MaximalSubgroupData data = maximal_subgroup_data(g, ring);
    if (data.h1_only)
        throw DomainError(describe(g) +
                          ": only the degree-one route applies to this family");
    return intersect_kernels(ring, data, max_degree, nullptr);
}

GradedSubspaceFamily essential_by_h1(const Presentation& ring, int max_degree) {
    if (ring.p() != 2)
        throw DomainError("the degree-one route needs p = 2");
    std::vector<GradedSubspaceFamily> families;
    for (const Element& u : h1_classes(ring))
        families.push_back(
            ideal_family(make_ideal(ring, {u}), max_degree));
    return intersect_graded(families, max_degree);
}

int default_max_degree(const GroupSpec& g) {
    return g.p == 2 ? 16 : 4 * static_cast<int>(g.p) + 4;
}

VerificationReport verify_theorem(const GroupSpec& g, int max_degree,
                                  Method method) {
    validate(g);
    if (max_degree < 0) max_degree = default_max_degree(g);

    Presentation ring = presentation_of(g);
    MaximalSubgroupData data = maximal_subgroup_data(g, ring);
    const bool kernels_available = !data.h1_only;
    const bool h1_available = ring.p() == 2;

    bool run_kernels = false;
    bool run_h1 = false;
    switch (method) {
        case Method::Kernels:
            if (!kernels_available)
                throw DomainError(
                    describe(g) +
                    ": only the degree-one route applies to this family");
            run_kernels = true;
            break;
        case Method::H1:
            if (!h1_available)
                throw DomainError("the degree-one route needs p = 2");
            run_h1 = true;
            break;
        case Method::Both:
            run_kernels = kernels_available;
            run_h1 = h1_available;
            break;
    }

    VerificationReport report;
    report.spec = g;
    report.max_degree = max_degree;
    report.method = (run_kernels && run_h1)
                        ? Method::Both
                        : (run_kernels ? Method::Kernels : Method::H1);

    std::optional<GradedSubspaceFamily> by_kernels;
    std::optional<GradedSubspaceFamily> by_h1;
    if (run_kernels)
        by_kernels = intersect_kernels(ring, data, max_degree, nullptr);
    if (run_h1) by_h1 = essential_by_h1(ring, max_degree);
    const GradedSubspaceFamily& computed = by_kernels ? *by_kernels : *by_h1;

    IdealSpec expected = expected_essential(g, ring);
    EqualityReport against_expected =
        ideals_equal_up_to(computed, expected, max_degree);
    report.per_degree = against_expected.per_degree;
    report.first_mismatch = against_expected.first_mismatch;
    bool ok = against_expected.equal;

    if (by_kernels && by_h1) {
        const bool agreed =
            ideals_equal_up_to(*by_kernels, *by_h1, max_degree).equal;
        report.invariance.push_back(
            {"kernel route and degree-one route agree", agreed});
        ok = ok && agreed;
    }

    if (by_kernels) {
        bool any_knob = false;
        for (const auto& datum : data.subgroups)
            if (!datum.knobs.empty()) any_knob = true;
        if (any_knob) {
            Rng rng(0xe55e4714a1ULL);
            for (int round = 1; round <= 5; ++round) {
                Overrides ov;
                ov.knobs.resize(data.subgroups.size());
                ov.picks.resize(data.subgroups.size());
                for (std::size_t i = 0; i < data.subgroups.size(); ++i)
                    for (const auto& slot : data.subgroups[i].knobs)
                        ov.knobs[i][slot.name] =
                            static_cast<std::uint32_t>(rng.next() % g.p);
                GradedSubspaceFamily varied =
                    intersect_kernels(ring, data, max_degree, &ov);
                const bool same =
                    ideals_equal_up_to(varied, *by_kernels, max_degree).equal;
                report.invariance.push_back(
                    {"random restriction scalars, round " +
                         std::to_string(round),
                     same});
                ok = ok && same;
            }
        }

        for (std::size_t i = 0; i < data.subgroups.size(); ++i) {
            const SubgroupDatum& datum = data.subgroups[i];
            for (const auto& slot : datum.choices) {
                for (std::size_t c = 1; c < slot.candidates.size(); ++c) {
                    Overrides ov;
                    ov.knobs.resize(data.subgroups.size());
                    ov.picks.resize(data.subgroups.size());
                    ov.picks[i][slot.name] = c;
                    GradedSubspaceFamily varied =
                        intersect_kernels(ring, data, max_degree, &ov);
                    const bool same =
                        ideals_equal_up_to(varied, *by_kernels, max_degree)
                            .equal;
                    report.invariance.push_back(
                        {"subgroup " + datum.label + ", " + slot.name + " = " +
                             datum.target->to_string(slot.candidates[c]),
                         same});
                    ok = ok && same;
                }
            }
        }
    }

    report.pass = ok;
    return report;
}

}  // namespace esscoh
