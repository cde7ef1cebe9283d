#pragma once

#include <map>
#include <optional>
#include <vector>

#include "esscoh/presentation.hpp"

namespace esscoh {

// A finitely generated homogeneous ideal, given by its generators. The
// presentation is referenced, not owned.
struct IdealSpec {
    const Presentation* owner = nullptr;
    std::vector<Element> generators;  // nonzero, homogeneous
};

IdealSpec make_ideal(const Presentation& P, std::vector<Element> generators);

// Span of {m * g : g ideal generator, m monomial, total degree d},
// in the coordinates of degree_basis(d).
Subspace ideal_degree(const IdealSpec& I, int d);

bool membership(const Element& e, const IdealSpec& I);

// Degreewise view of a graded subspace: ideal slices, kernels, intersections.
struct GradedSubspaceFamily {
    std::uint64_t presentation_id = 0;
    std::map<int, Subspace> slices;
};

GradedSubspaceFamily ideal_family(const IdealSpec& I, int max_degree);
GradedSubspaceFamily intersect_graded(
    const std::vector<GradedSubspaceFamily>& families, int max_degree);

struct DegreeComparison {
    int degree = 0;
    std::size_t dim_left = 0;
    std::size_t dim_right = 0;
    bool equal = true;
};

struct EqualityReport {
    std::vector<DegreeComparison> per_degree;
    bool equal = true;
    std::optional<int> first_mismatch;
};

EqualityReport ideals_equal_up_to(const GradedSubspaceFamily& a,
                                  const GradedSubspaceFamily& b, int max_degree);
EqualityReport ideals_equal_up_to(const IdealSpec& a, const IdealSpec& b,
                                  int max_degree);
EqualityReport ideals_equal_up_to(const GradedSubspaceFamily& a,
                                  const IdealSpec& b, int max_degree);

}  // namespace esscoh
