#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esscoh/error.hpp"
#include "esscoh/fp_linalg.hpp"

namespace esscoh {

struct GeneratorDecl {
    std::string name;
    int degree = 1;
    bool exterior = false;  // square vanishes even where parity would allow it
};

// Exponent vector in generator declaration order.
struct Monomial {
    std::vector<std::uint32_t> exps;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: larger exponent vectors come first (x^2, x*y, y^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps > b.exps;
    }
};

using TermMap = std::map<Monomial, std::uint32_t, MonomialOrder>;

class Presentation;

// Always reduced: supported only on representative monomials of the owning
// presentation's degree bases. Constructed through Presentation.
class Element {
  public:
    std::uint64_t presentation_id() const { return pres_id_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const Element&, const Element&) = default;

  private:
    friend class Presentation;
    explicit Element(std::uint64_t pres_id) : pres_id_(pres_id) {}
    std::uint64_t pres_id_;
    TermMap terms_;
};

// One graded piece of the quotient algebra.
struct DegreeBasis {
    int degree;
    std::vector<Monomial> monomials;        // every canonical monomial of this degree
    std::vector<Monomial> representatives;  // quotient basis, a subsequence of monomials
    FpMatrix projection;                    // representatives x monomials
};

// Finitely presented graded-commutative algebra over F_p. Immutable after
// construction; degree bases are computed on demand and cached. Elements
// carry the presentation id, so moving a Presentation keeps them valid.
class Presentation {
  public:
    Presentation(std::uint32_t p, std::vector<GeneratorDecl> generators,
                 const std::vector<std::string>& relations);
    Presentation(Presentation&&) noexcept;
    Presentation& operator=(Presentation&&) noexcept;
    Presentation(const Presentation&) = delete;
    Presentation& operator=(const Presentation&) = delete;
    ~Presentation();

    std::uint64_t id() const { return id_; }
    std::uint32_t p() const { return field_.p(); }
    const PrimeField& field() const { return field_; }
    const std::vector<GeneratorDecl>& generators() const { return gens_; }
    std::size_t generator_index(std::string_view name) const;
    const std::vector<TermMap>& relation_terms() const { return relation_terms_; }
    const std::vector<std::string>& relation_texts() const { return relation_texts_; }

    int monomial_degree(const Monomial& m) const;
    // Sorts a word of generator powers into canonical form. The returned
    // coefficient is the Koszul sign, or 0 when the word dies (a repeated
    // exterior or odd-degree factor).
    std::pair<std::uint32_t, Monomial> normalize_word(
        const std::vector<std::pair<std::size_t, std::uint32_t>>& word) const;
    std::pair<std::uint32_t, Monomial> monomial_product(const Monomial& a,
                                                        const Monomial& b) const;

    const DegreeBasis& degree_basis(int d) const;
    std::size_t hilbert_dimension(int d) const;

    Element zero() const;
    Element one() const;
    Element generator_element(std::size_t i) const;
    Element element_from_term(const Monomial& m, std::uint32_t coeff) const;
    // canonical image of a formal sum of canonical monomials
    Element reduce(const TermMap& raw) const;

    Element parse(std::string_view text) const;
    std::string to_string(const Element& e) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(std::uint32_t c, const Element& a) const;
    Element multiply(const Element& a, const Element& b) const;
    Element power(const Element& a, std::uint32_t e) const;

    bool is_homogeneous(const Element& e) const;
    int degree_of(const Element& e) const;  // rejects zero and mixed degrees

    // coordinates over degree_basis(d).representatives
    std::vector<std::uint32_t> coordinates(const Element& e, int d) const;
    Element from_coordinates(int d, const std::vector<std::uint32_t>& coords) const;

    // Disjoint union of generators with suffixes "1" and "2"; relations
    // carried over blockwise. Graded commutativity supplies the rest.
    static Presentation kunneth_product(const Presentation& a,
                                        const Presentation& b);

  private:
    struct CacheBox;
    struct RawRelations {};

    Presentation(RawRelations, std::uint32_t p, std::vector<GeneratorDecl> generators,
                 std::vector<TermMap> raw_relations);
    void validate_generators();
    void adopt_relations(std::vector<TermMap> raw);
    TermMap parse_raw(std::string_view text) const;
    std::string print_terms(const TermMap& terms) const;
    DegreeBasis compute_basis(int d) const;
    void enumerate_monomials(int d, std::vector<Monomial>& out) const;
    const Element& require_same(const Element& e) const;

    PrimeField field_;
    std::uint64_t id_;
    std::vector<GeneratorDecl> gens_;
    std::vector<bool> cap_one_;  // exponent capped at 1 (exterior, or odd degree at odd p)
    std::vector<TermMap> relation_terms_;
    std::vector<int> relation_degrees_;
    std::vector<std::string> relation_texts_;
    mutable std::unique_ptr<CacheBox> cache_;
};

}  // namespace esscoh
