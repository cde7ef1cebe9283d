#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "esscoh/morphism.hpp"
#include "esscoh/presentation.hpp"
#include "esscoh/steenrod.hpp"

namespace esscoh {

// The six catalog families of p-groups with a cyclic subgroup of index p:
//   A  cyclic of order p^n
//   B  cyclic times cyclic of order p, order p^(n+1)
//   C  extraspecial-type split extension of order p^(n+1) (n >= 2)
//   D  dihedral of order 2^n (n >= 3)
//   E  generalized quaternion of order 2^n (n >= 3)
//   F  semidihedral of order 2^(n+1) (n >= 3)
enum class Family { A, B, C, D, E, F };

struct GroupSpec {
    Family family = Family::A;
    std::uint32_t p = 2;
    int n = 1;
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

Family family_from_letter(char letter);
char family_letter(Family f);
std::string describe(const GroupSpec& g);
void validate(const GroupSpec& g);
std::uint64_t group_order(const GroupSpec& g);

// The mod-p cohomology ring of the group.
Presentation presentation_of(const GroupSpec& g);

// A scalar left undetermined in the derivation of a restriction map. The
// generator's image is value * unit_image; the default value is 1.
struct KnobSlot {
    std::string name;
    std::size_t generator = 0;
    Element unit_image;
};

// A generator image only determined up to finitely many admissible values.
// candidates[0] is the default.
struct ChoiceSlot {
    std::string name;
    std::size_t generator = 0;
    std::vector<Element> candidates;
};

struct SubgroupDatum {
    std::string label;
    std::unique_ptr<const Presentation> target;  // cohomology of the subgroup
    AlgebraMorphism restriction;                 // defaults applied
    std::vector<KnobSlot> knobs;
    std::vector<ChoiceSlot> choices;
};

// h1_only marks the families whose essential ideal is computed by
// intersecting principal ideals of degree-1 classes instead of kernels.
struct MaximalSubgroupData {
    bool h1_only = false;
    std::vector<SubgroupDatum> subgroups;
};

// ring must be presentation_of(g) and must outlive the returned data;
// the restriction morphisms point into both.
MaximalSubgroupData maximal_subgroup_data(const GroupSpec& g,
                                          const Presentation& ring);

// Rebuilds the restriction with explicit knob values and choice picks.
// Unknown names and out-of-range picks are rejected.
AlgebraMorphism restriction_with(
    const SubgroupDatum& datum, const Presentation& ring,
    const std::map<std::string, std::uint32_t>& knob_values,
    const std::map<std::string, std::size_t>& choice_picks);

// Generator list of the essential ideal the theory predicts.
IdealSpec expected_essential(const GroupSpec& g, const Presentation& ring);

// All 2^m - 1 nonzero combinations of the degree-1 basis, p = 2 only.
std::vector<Element> h1_classes(const Presentation& P);

// The Bockstein and power operation on the rank-two elementary abelian ring.
SteenrodAction elementary_abelian_action(const Presentation& ring);

}  // namespace esscoh
