#include "esscoh/morphism.hpp"

namespace esscoh {

AlgebraMorphism make_morphism(const Presentation& source,
                              const Presentation& target,
                              std::vector<Element> images) {
    if (images.size() != source.generators().size())
        throw DimensionError("one image per source generator required");
    if (source.p() != target.p()) throw DomainError("prime mismatch");
    for (std::size_t i = 0; i < images.size(); ++i) {
        const Element& im = images[i];
        if (im.presentation_id() != target.id())
            throw DomainError("image lives in the wrong presentation");
        if (im.is_zero()) continue;
        if (!target.is_homogeneous(im) ||
            target.degree_of(im) != source.generators()[i].degree)
            throw DimensionError("image degree must match the generator: " +
                                 source.generators()[i].name);
    }
    return AlgebraMorphism{&source, &target, std::move(images)};
}

namespace {

Element eval_terms(const AlgebraMorphism& f, const TermMap& terms) {
    const Presentation& T = *f.target;
    Element out = T.zero();
    for (const auto& [m, c] : terms) {
        Element val = T.one();
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i]) val = T.multiply(val, T.power(f.images[i], m.exps[i]));
        out = T.add(out, T.scale(c, val));
    }
    return out;
}

}  // namespace

Element apply(const AlgebraMorphism& f, const Element& e) {
    if (e.presentation_id() != f.source->id())
        throw DomainError("element is not in the source presentation");
    return eval_terms(f, e.terms());
}

std::vector<std::string> check_well_defined(const AlgebraMorphism& f) {
    std::vector<std::string> violations;
    const std::vector<TermMap>& rels = f.source->relation_terms();
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const Element image = eval_terms(f, rels[k]);
        if (!image.is_zero())
            violations.push_back("relation '" + f.source->relation_texts()[k] +
                                 "' has nonzero image '" +
                                 f.target->to_string(image) + "'");
    }
    return violations;
}

FpMatrix matrix_at(const AlgebraMorphism& f, int d) {
    const std::size_t scols = f.source->hilbert_dimension(d);
    const std::size_t trows = f.target->hilbert_dimension(d);
    FpMatrix m(f.source->p(), trows, scols);
    for (std::size_t j = 0; j < scols; ++j) {
        std::vector<std::uint32_t> unit(scols, 0);
        unit[j] = 1;
        const Element image = apply(f, f.source->from_coordinates(d, unit));
        const std::vector<std::uint32_t> col = f.target->coordinates(image, d);
        for (std::size_t i = 0; i < trows; ++i) m.set(i, j, col[i]);
    }
    return m;
}

Subspace kernel_degree(const AlgebraMorphism& f, int d) {
    return kernel_basis(matrix_at(f, d));
}

GradedSubspaceFamily kernel_family(const AlgebraMorphism& f, int max_degree) {
    GradedSubspaceFamily out{f.source->id(), {}};
    for (int d = 0; d <= max_degree; ++d) out.slices.emplace(d, kernel_degree(f, d));
    return out;
}

AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner) {
    if (inner.target->id() != outer.source->id())
        throw DomainError("morphisms do not compose");
    std::vector<Element> images;
    images.reserve(inner.images.size());
    for (const Element& im : inner.images) images.push_back(apply(outer, im));
    return make_morphism(*inner.source, *outer.target, std::move(images));
}

}  // namespace esscoh
