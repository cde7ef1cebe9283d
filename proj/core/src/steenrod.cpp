#include "esscoh/steenrod.hpp"

namespace esscoh {

namespace {

// d(m) for one monomial, where d raises degree and acts factorwise:
//   d(g^e) = e g^{e-1} d(g), factors taken in declaration order.
// koszul selects the derivation sign (-1)^{deg prefix}.
Element derive_monomial(const Presentation& P, const std::vector<Element>& images,
                        const Monomial& m, std::uint32_t coeff, bool koszul) {
    const PrimeField& f = P.field();
    Element out = P.zero();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        const std::uint32_t e = m.exps[i];
        if (e == 0) continue;
        const int gdeg = P.generators()[i].degree;
        if (!images[i].is_zero()) {
            std::uint32_t c = f.mul(coeff, e % P.p());
            if (koszul && prefix_degree % 2 != 0) c = f.neg(c);
            if (c != 0) {
                Monomial left = m;
                left.exps[i] -= 1;
                Monomial right;
                right.exps.assign(m.exps.size(), 0);
                for (std::size_t j = i + 1; j < m.exps.size(); ++j) {
                    right.exps[j] = m.exps[j];
                    left.exps[j] = 0;
                }
                const Element part = P.multiply(
                    P.multiply(P.element_from_term(left, 1), images[i]),
                    P.element_from_term(right, 1));
                out = P.add(out, P.scale(c, part));
            }
        }
        prefix_degree += static_cast<int>(e) * gdeg;
    }
    return out;
}

Element derive(const SteenrodAction& a, const std::vector<Element>& images,
               const Element& e, bool koszul) {
    const Presentation& P = *a.owner;
    if (e.presentation_id() != P.id())
        throw DomainError("element lives in a different presentation");
    if (!P.is_homogeneous(e)) throw DomainError("operation needs a homogeneous element");
    Element out = P.zero();
    for (const auto& [m, c] : e.terms())
        out = P.add(out, derive_monomial(P, images, m, c, koszul));
    return out;
}

}  // namespace

SteenrodAction make_steenrod_action(const Presentation& P,
                                    std::vector<Element> beta_images,
                                    std::vector<Element> p1_images) {
    const std::size_t n = P.generators().size();
    if (beta_images.size() != n)
        throw DimensionError("one Bockstein image per generator required");
    if (!p1_images.empty() && p1_images.size() != n)
        throw DimensionError("one power image per generator required");
    if (P.p() == 2 && !p1_images.empty())
        throw DomainError("the power operation is unavailable at p = 2");
    const int shift = 2 * (static_cast<int>(P.p()) - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const int gdeg = P.generators()[i].degree;
        const Element& b = beta_images[i];
        if (b.presentation_id() != P.id())
            throw DomainError("image lives in a different presentation");
        if (!b.is_zero() && (!P.is_homogeneous(b) || P.degree_of(b) != gdeg + 1))
            throw DimensionError("Bockstein image must raise degree by one: " +
                                 P.generators()[i].name);
        if (!p1_images.empty()) {
            const Element& q = p1_images[i];
            if (q.presentation_id() != P.id())
                throw DomainError("image lives in a different presentation");
            if (!q.is_zero() && (!P.is_homogeneous(q) || P.degree_of(q) != gdeg + shift))
                throw DimensionError("power image must raise degree by 2(p-1): " +
                                     P.generators()[i].name);
        }
    }
    SteenrodAction a{&P, std::move(beta_images), std::move(p1_images)};
    for (std::size_t i = 0; i < n; ++i)
        if (!bockstein(a, a.beta_images[i]).is_zero())
            throw DomainError("Bockstein does not square to zero on generator " +
                              P.generators()[i].name);
    return a;
}

bool has_power_operation(const SteenrodAction& a) { return !a.p1_images.empty(); }

Element bockstein(const SteenrodAction& a, const Element& e) {
    return derive(a, a.beta_images, e, true);
}

Element power_p1(const SteenrodAction& a, const Element& e) {
    if (!has_power_operation(a))
        throw DomainError("the power operation is unavailable for this action");
    return derive(a, a.p1_images, e, false);
}

IdealSpec steenrod_closure(const SteenrodAction& a, const IdealSpec& seed,
                           int max_degree) {
    const Presentation& P = *a.owner;
    if (seed.owner->id() != P.id())
        throw DomainError("seed lives in a different presentation");
    std::vector<Element> gens = seed.generators;
    for (const Element& g : gens)
        if (P.degree_of(g) > max_degree)
            throw DomainError("seed generator exceeds the degree bound");
    // one forward pass over the growing list reaches the fixed point:
    // the ideal only grows, so skipped images stay inside it
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Element> images;
        images.push_back(bockstein(a, gens[i]));
        if (has_power_operation(a)) images.push_back(power_p1(a, gens[i]));
        for (Element& img : images) {
            if (img.is_zero()) continue;
            if (P.degree_of(img) > max_degree) continue;
            if (membership(img, make_ideal(P, gens))) continue;
            gens.push_back(std::move(img));
        }
    }
    return make_ideal(P, std::move(gens));
}

}  // namespace esscoh
