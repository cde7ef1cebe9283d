#include "esscoh/resolution_oracle.hpp"

#include "esscoh/error.hpp"

namespace esscoh {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// (t - 1)v or (s - 1)v on kG^m, shift = left translation of the basis
std::vector<std::uint32_t> translate_minus(const std::vector<std::uint32_t>& v,
                                           const std::vector<std::uint32_t>& shift,
                                           std::size_t m, const PrimeField& field) {
    const std::size_t N = shift.size();
    std::vector<std::uint32_t> w(v.size(), 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t h = 0; h < N; ++h)
            w[r * N + shift[h]] = v[r * N + h];
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = field.sub(w[i], v[i]);
    return w;
}

}  // namespace

std::uint32_t GroupTable::product(std::uint32_t a, std::uint32_t b) const {
    return mul[a * order + b];
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
    for (std::uint32_t x = 0; x < order; ++x)
        if (product(a, x) == identity) return x;
    throw DomainError("element has no inverse, the table is not a group");
}

std::uint32_t GroupTable::power(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = identity;
    for (std::uint64_t i = 0; i < e; ++i) out = product(out, a);
    return out;
}

GroupTable group_table(const GroupSpec& g) {
    validate(g);
    const std::uint64_t order64 = group_order(g);
    if (order64 > 64)
        throw DomainError(describe(g) +
                          ": the resolution oracle handles orders up to 64");

    std::uint64_t t_order = 1;
    std::uint64_t s_order = 1;
    std::uint64_t r = 1;     // conjugation: s t s^-1 = t^r
    std::uint64_t fold = 0;  // extra twist of t when two s-parts combine
    switch (g.family) {
        case Family::A:
            t_order = order64;
            break;
        case Family::B:
            t_order = pow_u64(g.p, g.n);
            s_order = g.p;
            break;
        case Family::C:
            t_order = pow_u64(g.p, g.n);
            s_order = g.p;
            r = pow_u64(g.p, g.n - 1) + 1;
            break;
        case Family::D:
            t_order = pow_u64(2, g.n - 1);
            s_order = 2;
            r = t_order - 1;
            break;
        case Family::E:
            t_order = pow_u64(2, g.n - 1);
            s_order = 2;
            r = t_order - 1;
            fold = pow_u64(2, g.n - 2);  // s^2 = t^(2^(n-2))
            break;
        case Family::F:
            t_order = pow_u64(2, g.n);
            s_order = 2;
            r = pow_u64(2, g.n - 1) - 1;
            break;
    }

    GroupTable table;
    table.order = static_cast<std::uint32_t>(order64);
    table.identity = 0;
    table.t = 1;
    table.s = (s_order > 1) ? static_cast<std::uint32_t>(t_order) : 0;

    std::vector<std::uint64_t> rpow(s_order, 1);
    for (std::uint64_t b = 1; b < s_order; ++b)
        rpow[b] = (rpow[b - 1] * r) % t_order;

    const std::uint32_t N = table.order;
    table.mul.assign(static_cast<std::size_t>(N) * N, 0);
    for (std::uint64_t a = 0; a < t_order; ++a)
        for (std::uint64_t b = 0; b < s_order; ++b)
            for (std::uint64_t c = 0; c < t_order; ++c)
                for (std::uint64_t d = 0; d < s_order; ++d) {
                    std::uint64_t a2 = (a + c * rpow[b]) % t_order;
                    const std::uint64_t bd = b + d;
                    if (fold != 0 && bd >= 2) a2 = (a2 + fold) % t_order;
                    const std::uint64_t b2 = bd % s_order;
                    const std::uint32_t left =
                        static_cast<std::uint32_t>(b * t_order + a);
                    const std::uint32_t right =
                        static_cast<std::uint32_t>(d * t_order + c);
                    table.mul[left * N + right] =
                        static_cast<std::uint32_t>(b2 * t_order + a2);
                }

    // rows and columns must be permutations before the table can be a group
    for (std::uint32_t a = 0; a < N; ++a) {
        std::vector<bool> seen_row(N, false), seen_col(N, false);
        for (std::uint32_t b = 0; b < N; ++b) {
            seen_row[table.product(a, b)] = true;
            seen_col[table.product(b, a)] = true;
        }
        for (std::uint32_t x = 0; x < N; ++x)
            if (!seen_row[x] || !seen_col[x])
                throw DomainError("multiplication table is not a Latin square");
    }
    return table;
}

MinimalResolution minimal_resolution(const GroupSpec& g, int max_index) {
    if (max_index < 0) throw DomainError("resolution index must be nonnegative");
    MinimalResolution out;
    out.p = g.p;
    out.table = group_table(g);
    out.betti = {1};

    const GroupTable& table = out.table;
    const std::uint32_t N = table.order;
    const PrimeField field(g.p);
    const bool has_s = table.s != table.identity;

    std::vector<std::uint32_t> tshift(N), sshift(N);
    for (std::uint32_t h = 0; h < N; ++h) {
        tshift[h] = table.product(table.t, h);
        sshift[h] = table.product(table.s, h);
    }

    FpMatrix aug(g.p, 1, N);
    for (std::uint32_t h = 0; h < N; ++h) aug.set(0, h, 1);
    Subspace K = kernel_basis(aug);
    std::size_t m = 1;

    for (int i = 1; i <= max_index; ++i) {
        FpMatrix rad(g.p, 0, m * N);
        for (std::size_t row = 0; row < K.dim(); ++row) {
            const auto& v = K.basis().row(row);
            rad.append_row(translate_minus(v, tshift, m, field));
            if (has_s) rad.append_row(translate_minus(v, sshift, m, field));
        }
        const Subspace IK = Subspace::row_span(rad);

        // Nakayama: kernel vectors completing the radical generate the kernel
        std::vector<std::vector<std::uint32_t>> gens;
        Subspace covered = IK;
        for (std::size_t row = 0; row < K.dim(); ++row) {
            const auto& v = K.basis().row(row);
            if (covered.contains(v)) continue;
            gens.push_back(v);
            FpMatrix one(g.p, 0, m * N);
            one.append_row(v);
            covered = sum(covered, Subspace::row_span(one));
        }
        if (gens.size() != K.dim() - IK.dim())
            throw Error("generator completion failed");

        const std::size_t b = gens.size();
        FpMatrix d(g.p, m * N, b * N);
        for (std::size_t j = 0; j < b; ++j)
            for (std::uint32_t h = 0; h < N; ++h)
                for (std::size_t r = 0; r < m; ++r)
                    for (std::uint32_t idx = 0; idx < N; ++idx)
                        d.set(r * N + table.product(h, idx), j * N + h,
                              gens[j][r * N + idx]);
        out.differentials.push_back(d);
        out.betti.push_back(b);
        K = kernel_basis(d);
        m = b;
    }
    return out;
}

std::vector<std::size_t> betti_numbers(const GroupSpec& g, int max_index) {
    return minimal_resolution(g, max_index).betti;
}

std::vector<std::size_t> radical_filtration(const GroupTable& table,
                                            std::uint32_t p) {
    const PrimeField field(p);
    const std::uint32_t N = table.order;
    const bool has_s = table.s != table.identity;
    std::vector<std::uint32_t> tshift(N), sshift(N);
    for (std::uint32_t h = 0; h < N; ++h) {
        tshift[h] = table.product(table.t, h);
        sshift[h] = table.product(table.s, h);
    }

    std::vector<std::size_t> dims = {N};
    Subspace power = Subspace::full(p, N);
    while (power.dim() > 0) {
        FpMatrix rows(p, 0, N);
        for (std::size_t row = 0; row < power.dim(); ++row) {
            const auto& v = power.basis().row(row);
            rows.append_row(translate_minus(v, tshift, 1, field));
            if (has_s) rows.append_row(translate_minus(v, sshift, 1, field));
        }
        const Subspace next = Subspace::row_span(rows);
        if (next.dim() >= power.dim())
            throw Error("augmentation ideal powers must shrink");
        dims.push_back(next.dim());
        power = next;
    }
    return dims;
}

OracleReport oracle_check(const GroupSpec& g, int max_index) {
    OracleReport report;
    report.spec = g;
    const std::vector<std::size_t> betti = betti_numbers(g, max_index);
    const Presentation ring = presentation_of(g);
    for (int i = 0; i <= max_index; ++i) {
        const std::size_t ring_dim = ring.hilbert_dimension(i);
        const bool equal = betti[i] == ring_dim;
        report.per_index.push_back({i, betti[i], ring_dim, equal});
        if (!equal) report.pass = false;
    }
    return report;
}

std::vector<GroupSpec> oracle_census() {
    std::vector<GroupSpec> out;
    const std::uint32_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                    29, 31, 37, 41, 43, 47, 53, 59, 61};
    for (std::uint32_t p : primes) {
        for (int n = 1; pow_u64(p, n) <= 64; ++n)
            out.push_back({Family::A, p, n});
        for (int n = 1; pow_u64(p, n + 1) <= 64; ++n)
            out.push_back({Family::B, p, n});
        for (int n = 2; pow_u64(p, n + 1) <= 64; ++n)
            out.push_back({Family::C, p, n});
    }
    for (int n = 3; pow_u64(2, n) <= 64; ++n) {
        out.push_back({Family::D, 2, n});
        out.push_back({Family::E, 2, n});
    }
    for (int n = 3; pow_u64(2, n + 1) <= 64; ++n)
        out.push_back({Family::F, 2, n});
    return out;
}

}  // namespace esscoh
