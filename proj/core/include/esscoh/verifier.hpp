#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esscoh/catalog.hpp"
#include "esscoh/ideal.hpp"

namespace esscoh {

// The two routes to the essential ideal: intersecting kernels of the
// restriction maps to maximal subgroups, and intersecting the principal
// ideals on the nonzero degree-1 classes (p = 2 only).
enum class Method { Kernels, H1, Both };

Method method_from_name(const std::string& name);  // kernels | h1 | both
std::string method_name(Method m);

// Degreewise intersection of restriction kernels, default scalars.
// Rejects the families that only support the degree-one route.
GradedSubspaceFamily essential_by_kernels(const GroupSpec& g,
                                          const Presentation& ring,
                                          int max_degree);

// Degreewise intersection of the principal ideals (u), u nonzero of degree 1.
GradedSubspaceFamily essential_by_h1(const Presentation& ring, int max_degree);

struct InvarianceCheck {
    std::string description;
    bool agreed = true;
};

struct VerificationReport {
    GroupSpec spec;
    Method method = Method::Both;  // the routes that actually ran
    int max_degree = 0;
    // computed (left) against the predicted ideal (right), degree by degree
    std::vector<DegreeComparison> per_degree;
    std::vector<InvarianceCheck> invariance;
    bool pass = false;
    std::optional<int> first_mismatch;
};

// 16 at p = 2, 4p + 4 at odd p; every predicted generator lies well inside.
int default_max_degree(const GroupSpec& g);

// Computes the essential ideal of the group with the requested routes and
// compares it against the predicted one, degree by degree up to max_degree
// (negative means the default). Method::Both runs every route available to
// the family and records their agreement; it also re-runs the kernel route
// under randomized scalar knobs and swept image choices.
VerificationReport verify_theorem(const GroupSpec& g, int max_degree = -1,
                                  Method method = Method::Both);

}  // namespace esscoh
