#pragma once

#include <string>
#include <vector>

#include "esscoh/ideal.hpp"
#include "esscoh/presentation.hpp"

namespace esscoh {

// Degree-preserving algebra map, determined by generator images. The
// presentations are referenced, not owned: keep them alive and unmoved
// for as long as the morphism is used.
struct AlgebraMorphism {
    const Presentation* source = nullptr;
    const Presentation* target = nullptr;
    std::vector<Element> images;  // one per source generator; zero allowed
};

// Validates arity and that each nonzero image is homogeneous of its
// generator's degree.
AlgebraMorphism make_morphism(const Presentation& source,
                              const Presentation& target,
                              std::vector<Element> images);

// Monomials evaluate left to right in declaration order, so Koszul signs
// live in the target's multiplication.
Element apply(const AlgebraMorphism& f, const Element& e);

// Evaluates every source relation on the images. Empty result means the
// morphism is a well-defined map of quotient algebras.
std::vector<std::string> check_well_defined(const AlgebraMorphism& f);

// Matrix of the induced linear map degree_basis(source, d) -> degree_basis(target, d).
FpMatrix matrix_at(const AlgebraMorphism& f, int d);

Subspace kernel_degree(const AlgebraMorphism& f, int d);
GradedSubspaceFamily kernel_family(const AlgebraMorphism& f, int max_degree);

AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner);

}  // namespace esscoh
