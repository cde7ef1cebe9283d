#include "esscoh/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>

namespace esscoh {

namespace {

std::atomic<std::uint64_t> next_presentation_id{1};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

struct Presentation::CacheBox {
    std::mutex mu;
    std::map<int, std::unique_ptr<const DegreeBasis>> bases;
};

Presentation::Presentation(std::uint32_t p, std::vector<GeneratorDecl> generators,
                           const std::vector<std::string>& relations)
    : field_(p),
      id_(next_presentation_id.fetch_add(1)),
      gens_(std::move(generators)),
      cache_(std::make_unique<CacheBox>()) {
    validate_generators();
    std::vector<TermMap> raw;
    raw.reserve(relations.size());
    for (const std::string& text : relations) raw.push_back(parse_raw(text));
    adopt_relations(std::move(raw));
}

Presentation::Presentation(RawRelations, std::uint32_t p,
                           std::vector<GeneratorDecl> generators,
                           std::vector<TermMap> raw_relations)
    : field_(p),
      id_(next_presentation_id.fetch_add(1)),
      gens_(std::move(generators)),
      cache_(std::make_unique<CacheBox>()) {
    validate_generators();
    adopt_relations(std::move(raw_relations));
}

Presentation::Presentation(Presentation&&) noexcept = default;
Presentation& Presentation::operator=(Presentation&&) noexcept = default;
Presentation::~Presentation() = default;

void Presentation::validate_generators() {
    for (const GeneratorDecl& g : gens_) {
        if (g.degree < 1) throw DomainError("generator degree must be positive: " + g.name);
        if (g.name.empty() || !ident_start(g.name[0]))
            throw DomainError("invalid generator name: '" + g.name + "'");
        for (char c : g.name)
            if (!ident_char(c))
                throw DomainError("invalid generator name: '" + g.name + "'");
        std::size_t seen = 0;
        for (const GeneratorDecl& h : gens_)
            if (h.name == g.name) ++seen;
        if (seen != 1) throw DomainError("duplicate generator name: " + g.name);
    }
    cap_one_.clear();
    for (const GeneratorDecl& g : gens_)
        cap_one_.push_back(g.exterior || (p() != 2 && g.degree % 2 != 0));
}

void Presentation::adopt_relations(std::vector<TermMap> raw) {
    for (TermMap& r : raw) {
        if (r.empty())
            throw DomainError("relation is already zero in the free algebra");
        int d = -1;
        for (const auto& [m, c] : r) {
            if (m.exps.size() != gens_.size())
                throw DimensionError("relation monomial has wrong arity");
            if (c == 0 || c >= p()) throw DomainError("relation coefficient not reduced");
            const int md = monomial_degree(m);
            if (d == -1) d = md;
            if (md != d) throw DomainError("relation must be homogeneous: " + print_terms(r));
        }
        if (d == 0) throw DomainError("relation of degree 0 makes the algebra collapse");
        relation_degrees_.push_back(d);
        relation_texts_.push_back(print_terms(r));
        relation_terms_.push_back(std::move(r));
    }
}

std::size_t Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw DomainError("unknown generator: '" + std::string(name) + "'");
}

int Presentation::monomial_degree(const Monomial& m) const {
    if (m.exps.size() != gens_.size()) throw DimensionError("monomial arity mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += static_cast<long long>(m.exps[i]) * gens_[i].degree;
    return static_cast<int>(d);
}

std::pair<std::uint32_t, Monomial> Presentation::normalize_word(
    const std::vector<std::pair<std::size_t, std::uint32_t>>& word) const {
    Monomial m;
    m.exps.assign(gens_.size(), 0);
    for (const auto& [g, e] : word) {
        if (g >= gens_.size()) throw DomainError("generator index out of range");
        m.exps[g] += e;
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (cap_one_[i] && m.exps[i] > 1) return {0, Monomial{}};
    std::uint32_t sign = 1;
    if (p() != 2) {
        // transpositions needed to sort the odd-degree factors
        std::vector<std::size_t> odd;
        for (const auto& [g, e] : word)
            if (gens_[g].degree % 2 != 0)
                for (std::uint32_t k = 0; k < e; ++k) odd.push_back(g);
        std::uint64_t inv = 0;
        for (std::size_t a = 0; a < odd.size(); ++a)
            for (std::size_t b = a + 1; b < odd.size(); ++b)
                if (odd[a] > odd[b]) ++inv;
        if (inv % 2 != 0) sign = field_.neg(1);
    }
    return {sign, std::move(m)};
}

std::pair<std::uint32_t, Monomial> Presentation::monomial_product(
    const Monomial& a, const Monomial& b) const {
    const std::size_t n = gens_.size();
    if (a.exps.size() != n || b.exps.size() != n)
        throw DimensionError("monomial arity mismatch");
    Monomial out;
    out.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.exps[i] = a.exps[i] + b.exps[i];
    for (std::size_t i = 0; i < n; ++i)
        if (cap_one_[i] && out.exps[i] > 1) return {0, Monomial{}};
    std::uint32_t sign = 1;
    if (p() != 2) {
        // each odd factor of b passes the odd factors of a that sit above it
        std::uint64_t inv = 0, a_above = 0;
        for (std::size_t i = n; i-- > 0;) {
            if (gens_[i].degree % 2 != 0) {
                inv += static_cast<std::uint64_t>(b.exps[i]) * a_above;
                a_above += a.exps[i];
            }
        }
        if (inv % 2 != 0) sign = field_.neg(1);
    }
    return {sign, std::move(out)};
}

void Presentation::enumerate_monomials(int d, std::vector<Monomial>& out) const {
    Monomial cur;
    cur.exps.assign(gens_.size(), 0);
    auto rec = [&](auto&& self, std::size_t gi, int rem) -> void {
        if (gi == gens_.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        std::uint32_t emax = static_cast<std::uint32_t>(rem / gens_[gi].degree);
        if (cap_one_[gi] && emax > 1) emax = 1;
        for (std::uint32_t e = emax + 1; e-- > 0;) {
            cur.exps[gi] = e;
            self(self, gi + 1, rem - static_cast<int>(e) * gens_[gi].degree);
        }
        cur.exps[gi] = 0;
    };
    rec(rec, 0, d);
}

namespace {

// monomials lists are sorted in the canonical term order
std::size_t column_of(const std::vector<Monomial>& monomials, const Monomial& m) {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, MonomialOrder{});
    if (it == monomials.end() || !(*it == m))
        throw DomainError("monomial is not canonical for this presentation");
    return static_cast<std::size_t>(it - monomials.begin());
}

}  // namespace

DegreeBasis Presentation::compute_basis(int d) const {
    std::vector<Monomial> monomials;
    enumerate_monomials(d, monomials);
    const std::size_t ncols = monomials.size();
    FpMatrix rel_rows(p(), 0, ncols);
    for (std::size_t k = 0; k < relation_terms_.size(); ++k) {
        const int e = relation_degrees_[k];
        if (e > d) continue;
        std::vector<Monomial> mults;
        enumerate_monomials(d - e, mults);
        for (const Monomial& m : mults) {
            std::vector<std::uint32_t> row(ncols, 0);
            bool nonzero = false;
            for (const auto& [rm, rc] : relation_terms_[k]) {
                auto [s, pm] = monomial_product(m, rm);
                if (!s) continue;
                const std::size_t c = column_of(monomials, pm);
                row[c] = field_.add(row[c], field_.mul(s, rc));
            }
            for (std::uint32_t v : row) nonzero = nonzero || v != 0;
            if (nonzero) rel_rows.append_row(row);
        }
    }
    RrefResult rr = rref(rel_rows);
    std::vector<bool> pivot(ncols, false);
    for (std::size_t c : rr.pivots) pivot[c] = true;
    std::vector<Monomial> reps;
    std::vector<std::size_t> rep_cols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!pivot[c]) {
            reps.push_back(monomials[c]);
            rep_cols.push_back(c);
        }
    FpMatrix proj(p(), reps.size(), ncols);
    for (std::size_t j = 0; j < reps.size(); ++j) proj.set(j, rep_cols[j], 1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            proj.set(j, rr.pivots[i], field_.neg(rr.matrix.at(i, rep_cols[j])));
    return DegreeBasis{d, std::move(monomials), std::move(reps), std::move(proj)};
}

const DegreeBasis& Presentation::degree_basis(int d) const {
    if (d < 0) throw DomainError("degree must be nonnegative");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(d);
    if (it == cache_->bases.end())
        it = cache_->bases
                 .emplace(d, std::make_unique<const DegreeBasis>(compute_basis(d)))
                 .first;
    return *it->second;
}

std::size_t Presentation::hilbert_dimension(int d) const {
    return degree_basis(d).representatives.size();
}

Element Presentation::zero() const { return Element(id_); }

Element Presentation::one() const {
    Element e(id_);
    Monomial m;
    m.exps.assign(gens_.size(), 0);
    e.terms_.emplace(std::move(m), 1);
    return e;
}

Element Presentation::generator_element(std::size_t i) const {
    if (i >= gens_.size()) throw DomainError("generator index out of range");
    Monomial m;
    m.exps.assign(gens_.size(), 0);
    m.exps[i] = 1;
    TermMap t;
    t.emplace(std::move(m), 1);
    return reduce(t);
}

Element Presentation::element_from_term(const Monomial& m, std::uint32_t coeff) const {
    TermMap t;
    const std::uint32_t c = coeff % p();
    if (c) t.emplace(m, c);
    return reduce(t);
}

Element Presentation::reduce(const TermMap& raw) const {
    Element out(id_);
    std::map<int, std::vector<std::pair<const Monomial*, std::uint32_t>>> comps;
    for (const auto& [m, c] : raw) {
        if (c == 0) continue;
        if (c >= p()) throw DomainError("coefficient not reduced mod p");
        comps[monomial_degree(m)].push_back({&m, c});
    }
    for (const auto& [d, terms] : comps) {
        const DegreeBasis& db = degree_basis(d);
        std::vector<std::uint32_t> full(db.monomials.size(), 0);
        for (const auto& [mp, c] : terms) {
            const std::size_t col = column_of(db.monomials, *mp);
            full[col] = field_.add(full[col], c);
        }
        const std::vector<std::uint32_t> rep = apply_matrix(db.projection, full);
        for (std::size_t j = 0; j < rep.size(); ++j)
            if (rep[j]) out.terms_.emplace(db.representatives[j], rep[j]);
    }
    return out;
}

TermMap Presentation::parse_raw(std::string_view text) const {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_coefficient = [&]() -> std::uint32_t {
        std::uint64_t acc = 0;
        while (i < text.size() && digit(text[i])) {
            acc = (acc * 10 + static_cast<std::uint64_t>(text[i] - '0')) % p();
            ++i;
        }
        return static_cast<std::uint32_t>(acc);
    };
    auto read_identifier = [&]() -> std::string_view {
        const std::size_t start = i;
        while (i < text.size() && ident_char(text[i])) ++i;
        return text.substr(start, i - start);
    };

    TermMap acc;
    bool negate = false;
    for (;;) {
        skip();
        if (i >= text.size()) throw ParseError("expected a term", i);
        std::uint32_t coeff = 1;
        std::vector<std::pair<std::size_t, std::uint32_t>> word;
        bool want_factors = true;
        if (digit(text[i])) {
            coeff = read_coefficient();
            skip();
            if (i < text.size() && text[i] == '*')
                ++i;
            else
                want_factors = false;  // bare constant term
        }
        if (want_factors) {
            for (;;) {
                skip();
                if (i >= text.size() || !ident_start(text[i]))
                    throw ParseError("expected a generator", i);
                const std::size_t name_at = i;
                const std::string_view name = read_identifier();
                std::size_t gi;
                try {
                    gi = generator_index(name);
                } catch (const DomainError&) {
                    throw ParseError("unknown generator: '" + std::string(name) + "'",
                                     name_at);
                }
                std::uint32_t exp = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    const std::size_t exp_at = i;
                    std::uint64_t e = 0;
                    while (i < text.size() && digit(text[i])) {
                        e = e * 10 + static_cast<std::uint64_t>(text[i] - '0');
                        if (e > (1u << 20)) throw ParseError("exponent too large", exp_at);
                        ++i;
                    }
                    if (i == exp_at) throw ParseError("expected an exponent", i);
                    if (e == 0) throw ParseError("exponent must be positive", exp_at);
                    exp = static_cast<std::uint32_t>(e);
                }
                word.push_back({gi, exp});
                skip();
                if (i < text.size() && text[i] == '*')
                    ++i;
                else
                    break;
            }
        }
        auto [sign, mono] = normalize_word(word);
        std::uint32_t v = field_.mul(coeff, sign);
        if (negate) v = field_.neg(v);
        if (v) {
            auto it = acc.find(mono);
            const std::uint32_t merged =
                field_.add(it == acc.end() ? 0u : it->second, v);
            if (merged)
                acc[mono] = merged;
            else if (it != acc.end())
                acc.erase(it);
        }
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+')
            negate = false;
        else if (text[i] == '-')
            negate = true;
        else
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        ++i;
    }
    return acc;
}

Element Presentation::parse(std::string_view text) const { return reduce(parse_raw(text)); }

std::string Presentation::print_terms(const TermMap& terms) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const std::uint32_t e = m.exps[i];
            if (!e) continue;
            if (!mono.empty()) mono += '*';
            mono += gens_[i].name;
            if (e > 1) {
                mono += '^';
                mono += std::to_string(e);
            }
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else {
            out += std::to_string(c);
            out += '*';
            out += mono;
        }
    }
    return out;
}

std::string Presentation::to_string(const Element& e) const {
    return print_terms(require_same(e).terms_);
}

const Element& Presentation::require_same(const Element& e) const {
    if (e.pres_id_ != id_)
        throw DomainError("element belongs to a different presentation");
    return e;
}

Element Presentation::add(const Element& a, const Element& b) const {
    require_same(a);
    require_same(b);
    Element out = a;
    for (const auto& [m, c] : b.terms_) {
        auto it = out.terms_.find(m);
        const std::uint32_t v = field_.add(it == out.terms_.end() ? 0u : it->second, c);
        if (v)
            out.terms_[m] = v;
        else if (it != out.terms_.end())
            out.terms_.erase(it);
    }
    return out;
}

Element Presentation::negate(const Element& a) const { return scale(p() - 1, a); }

Element Presentation::sub(const Element& a, const Element& b) const {
    return add(a, negate(b));
}

Element Presentation::scale(std::uint32_t c, const Element& a) const {
    require_same(a);
    const std::uint32_t cr = c % p();
    Element out(id_);
    if (cr == 0) return out;
    for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, field_.mul(cr, v));
    return out;
}

Element Presentation::multiply(const Element& a, const Element& b) const {
    require_same(a);
    require_same(b);
    TermMap raw;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [s, m] = monomial_product(ma, mb);
            if (!s) continue;
            const std::uint32_t v = field_.mul(field_.mul(ca, cb), s);
            auto it = raw.find(m);
            const std::uint32_t merged =
                field_.add(it == raw.end() ? 0u : it->second, v);
            if (merged)
                raw[m] = merged;
            else if (it != raw.end())
                raw.erase(it);
        }
    }
    return reduce(raw);
}

Element Presentation::power(const Element& a, std::uint32_t e) const {
    require_same(a);
    if (e == 0) return one();
    Element acc = a;
    for (std::uint32_t k = 1; k < e; ++k) acc = multiply(acc, a);
    return acc;
}

bool Presentation::is_homogeneous(const Element& e) const {
    require_same(e);
    int d = -1;
    for (const auto& [m, c] : e.terms_) {
        (void)c;
        const int md = monomial_degree(m);
        if (d == -1) d = md;
        if (md != d) return false;
    }
    return true;
}

int Presentation::degree_of(const Element& e) const {
    require_same(e);
    if (e.terms_.empty()) throw DomainError("the zero element has no degree");
    int d = -1;
    for (const auto& [m, c] : e.terms_) {
        (void)c;
        const int md = monomial_degree(m);
        if (d == -1) d = md;
        if (md != d) throw DomainError("element is not homogeneous: " + print_terms(e.terms_));
    }
    return d;
}

std::vector<std::uint32_t> Presentation::coordinates(const Element& e, int d) const {
    require_same(e);
    const DegreeBasis& db = degree_basis(d);
    std::vector<std::uint32_t> v(db.representatives.size(), 0);
    for (const auto& [m, c] : e.terms_) {
        if (monomial_degree(m) != d)
            throw DimensionError("element has a term outside the requested degree");
        v[column_of(db.representatives, m)] = c;
    }
    return v;
}

Element Presentation::from_coordinates(int d,
                                       const std::vector<std::uint32_t>& coords) const {
    const DegreeBasis& db = degree_basis(d);
    if (coords.size() != db.representatives.size())
        throw DimensionError("coordinate vector length mismatch");
    Element out(id_);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const std::uint32_t c = coords[j] % p();
        if (c) out.terms_.emplace(db.representatives[j], c);
    }
    return out;
}

Presentation Presentation::kunneth_product(const Presentation& a,
                                           const Presentation& b) {
    if (a.p() != b.p()) throw DomainError("factors must share the same prime");
    std::vector<GeneratorDecl> gens;
    gens.reserve(a.gens_.size() + b.gens_.size());
    for (const GeneratorDecl& g : a.gens_)
        gens.push_back({g.name + "1", g.degree, g.exterior});
    for (const GeneratorDecl& g : b.gens_)
        gens.push_back({g.name + "2", g.degree, g.exterior});
    const std::size_t na = a.gens_.size(), nb = b.gens_.size();
    std::vector<TermMap> raw;
    raw.reserve(a.relation_terms_.size() + b.relation_terms_.size());
    for (const TermMap& r : a.relation_terms_) {
        TermMap t;
        for (const auto& [m, c] : r) {
            Monomial mm;
            mm.exps = m.exps;
            mm.exps.resize(na + nb, 0);
            t.emplace(std::move(mm), c);
        }
        raw.push_back(std::move(t));
    }
    for (const TermMap& r : b.relation_terms_) {
        TermMap t;
        for (const auto& [m, c] : r) {
            Monomial mm;
            mm.exps.assign(na + nb, 0);
            std::copy(m.exps.begin(), m.exps.end(), mm.exps.begin() + static_cast<std::ptrdiff_t>(na));
            t.emplace(std::move(mm), c);
        }
        raw.push_back(std::move(t));
    }
    return Presentation(RawRelations{}, a.p(), std::move(gens), std::move(raw));
}

}  // namespace esscoh
