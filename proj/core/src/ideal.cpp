#include "esscoh/ideal.hpp"

namespace esscoh {

namespace {

const Subspace& slice_at(const GradedSubspaceFamily& f, int d) {
    auto it = f.slices.find(d);
    if (it == f.slices.end())
        throw DomainError("family has no slice at degree " + std::to_string(d));
    return it->second;
}

}  // namespace

IdealSpec make_ideal(const Presentation& P, std::vector<Element> generators) {
    for (const Element& g : generators) {
        if (g.presentation_id() != P.id())
            throw DomainError("ideal generator lives in a different presentation");
        if (g.is_zero()) throw DomainError("ideal generators must be nonzero");
        P.degree_of(g);  // rejects inhomogeneous generators
    }
    return IdealSpec{&P, std::move(generators)};
}

Subspace ideal_degree(const IdealSpec& I, int d) {
    const Presentation& P = *I.owner;
    FpMatrix rows(P.p(), 0, P.hilbert_dimension(d));
    for (const Element& g : I.generators) {
        const int e = P.degree_of(g);
        if (e > d) continue;
        // representatives suffice: every monomial is congruent to a
        // combination of them, and the difference multiplies into zero
        for (const Monomial& m : P.degree_basis(d - e).representatives) {
            const Element prod = P.multiply(P.element_from_term(m, 1), g);
            if (!prod.is_zero()) rows.append_row(P.coordinates(prod, d));
        }
    }
    return Subspace::row_span(rows);
}

bool membership(const Element& e, const IdealSpec& I) {
    const Presentation& P = *I.owner;
    if (e.presentation_id() != P.id())
        throw DomainError("element lives in a different presentation");
    if (e.is_zero()) return true;
    const int d = P.degree_of(e);
    return ideal_degree(I, d).contains(P.coordinates(e, d));
}

GradedSubspaceFamily ideal_family(const IdealSpec& I, int max_degree) {
    GradedSubspaceFamily out{I.owner->id(), {}};
    for (int d = 0; d <= max_degree; ++d) out.slices.emplace(d, ideal_degree(I, d));
    return out;
}

GradedSubspaceFamily intersect_graded(
    const std::vector<GradedSubspaceFamily>& families, int max_degree) {
    if (families.empty()) throw DomainError("nothing to intersect");
    GradedSubspaceFamily out{families.front().presentation_id, {}};
    for (const GradedSubspaceFamily& f : families)
        if (f.presentation_id != out.presentation_id)
            throw DomainError("families belong to different presentations");
    for (int d = 0; d <= max_degree; ++d) {
        Subspace acc = slice_at(families.front(), d);
        for (std::size_t i = 1; i < families.size(); ++i)
            acc = intersect(acc, slice_at(families[i], d));
        out.slices.emplace(d, std::move(acc));
    }
    return out;
}

EqualityReport ideals_equal_up_to(const GradedSubspaceFamily& a,
                                  const GradedSubspaceFamily& b, int max_degree) {
    if (a.presentation_id != b.presentation_id)
        throw DomainError("comparison needs a single presentation");
    EqualityReport rep;
    for (int d = 0; d <= max_degree; ++d) {
        const Subspace& sa = slice_at(a, d);
        const Subspace& sb = slice_at(b, d);
        const bool eq = sa == sb;
        rep.per_degree.push_back({d, sa.dim(), sb.dim(), eq});
        if (!eq && !rep.first_mismatch) {
            rep.first_mismatch = d;
            rep.equal = false;
        }
    }
    return rep;
}

EqualityReport ideals_equal_up_to(const IdealSpec& a, const IdealSpec& b,
                                  int max_degree) {
    return ideals_equal_up_to(ideal_family(a, max_degree),
                              ideal_family(b, max_degree), max_degree);
}

EqualityReport ideals_equal_up_to(const GradedSubspaceFamily& a,
                                  const IdealSpec& b, int max_degree) {
    return ideals_equal_up_to(a, ideal_family(b, max_degree), max_degree);
}

}  // namespace esscoh
