#pragma once

#include <vector>

#include "esscoh/ideal.hpp"
#include "esscoh/presentation.hpp"

namespace esscoh {

// Bockstein and first power operation, given by their values on generators
// and extended as derivations. The presentation is referenced, not owned.
struct SteenrodAction {
    const Presentation* owner = nullptr;
    std::vector<Element> beta_images;  // degree +1
    std::vector<Element> p1_images;    // degree +2(p-1); empty when unavailable
};

// Validates image degrees and that the Bockstein squares to zero on
// generators. At p = 2 the power operation must be left empty.
SteenrodAction make_steenrod_action(const Presentation& P,
                                    std::vector<Element> beta_images,
                                    std::vector<Element> p1_images);

bool has_power_operation(const SteenrodAction& a);

// Graded derivation: beta(fg) = beta(f) g + (-1)^{|f|} f beta(g).
Element bockstein(const SteenrodAction& a, const Element& e);

// Extension by the Cartan formula, sign free: P1(fg) = P1(f) g + f P1(g).
Element power_p1(const SteenrodAction& a, const Element& e);

// Least fixed point: images of current generators are appended while they
// are nonzero, of degree at most max_degree, and outside the current ideal.
IdealSpec steenrod_closure(const SteenrodAction& a, const IdealSpec& seed,
                           int max_degree);

}  // namespace esscoh
