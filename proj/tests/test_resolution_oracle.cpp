#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "esscoh/catalog.hpp"
#include "esscoh/error.hpp"
#include "esscoh/resolution_oracle.hpp"

using namespace esscoh;

namespace {

std::vector<GroupSpec> table_specs() {
    return {
        {Family::A, 2, 3},  {Family::A, 3, 2},  {Family::A, 61, 1},
        {Family::B, 2, 2},  {Family::B, 3, 1},  {Family::C, 2, 3},
        {Family::C, 3, 2},  {Family::D, 2, 4},  {Family::E, 2, 3},
        {Family::E, 2, 4},  {Family::F, 2, 3},
    };
}

// sum of coefficients of one kG-component of a module vector
std::uint32_t component_augmentation(const FpMatrix& d, std::size_t col,
                                     std::size_t component,
                                     std::uint32_t order) {
    std::uint64_t total = 0;
    for (std::uint32_t h = 0; h < order; ++h)
        total += d.at(component * order + h, col);
    return static_cast<std::uint32_t>(total % d.p());
}

}  // namespace

TEST_CASE("multiplication tables are groups with the defining relations") {
    for (const auto& g : table_specs()) {
        CAPTURE(describe(g));
        GroupTable table = group_table(g);
        REQUIRE(table.order == group_order(g));
        const std::uint32_t N = table.order;

        for (std::uint32_t a = 0; a < N; ++a) {
            CHECK(table.product(table.identity, a) == a);
            CHECK(table.product(a, table.identity) == a);
            CHECK(table.product(a, table.inverse(a)) == table.identity);
        }
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b)
                for (std::uint32_t c = 0; c < N; ++c)
                    CHECK(table.product(table.product(a, b), c) ==
                          table.product(a, table.product(b, c)));
    }
}

TEST_CASE("generator relations per family") {
    {
        GroupTable cyclic = group_table({Family::A, 3, 2});
        CHECK(cyclic.s == cyclic.identity);
        CHECK(cyclic.power(cyclic.t, 9) == cyclic.identity);
        CHECK(cyclic.power(cyclic.t, 3) != cyclic.identity);
    }
    {
        GroupTable direct = group_table({Family::B, 3, 1});
        CHECK(direct.product(direct.t, direct.s) ==
              direct.product(direct.s, direct.t));
        CHECK(direct.power(direct.t, 3) == direct.identity);
        CHECK(direct.power(direct.s, 3) == direct.identity);
    }
    {
        GroupTable modular = group_table({Family::C, 3, 2});
        const std::uint32_t conj = modular.product(
            modular.product(modular.s, modular.t), modular.inverse(modular.s));
        CHECK(conj == modular.power(modular.t, 4));  // r = 3 + 1
        CHECK(modular.power(modular.s, 3) == modular.identity);
        CHECK(modular.power(modular.t, 9) == modular.identity);
    }
    {
        GroupTable dihedral = group_table({Family::D, 2, 4});
        const std::uint32_t conj =
            dihedral.product(dihedral.product(dihedral.s, dihedral.t),
                             dihedral.inverse(dihedral.s));
        CHECK(conj == dihedral.inverse(dihedral.t));
        CHECK(dihedral.power(dihedral.s, 2) == dihedral.identity);
        CHECK(dihedral.power(dihedral.t, 8) == dihedral.identity);
    }
    {
        GroupTable quaternion = group_table({Family::E, 2, 4});
        CHECK(quaternion.power(quaternion.s, 2) ==
              quaternion.power(quaternion.t, 4));  // s^2 = t^(2^(n-2))
        const std::uint32_t conj = quaternion.product(
            quaternion.product(quaternion.s, quaternion.t),
            quaternion.inverse(quaternion.s));
        CHECK(conj == quaternion.inverse(quaternion.t));
        // the quaternion fold keeps a single element of order 2
        std::size_t involutions = 0;
        for (std::uint32_t a = 0; a < quaternion.order; ++a)
            if (a != quaternion.identity &&
                quaternion.product(a, a) == quaternion.identity)
                ++involutions;
        CHECK(involutions == 1);
    }
    {
        GroupTable semidihedral = group_table({Family::F, 2, 3});
        const std::uint32_t conj = semidihedral.product(
            semidihedral.product(semidihedral.s, semidihedral.t),
            semidihedral.inverse(semidihedral.s));
        CHECK(conj == semidihedral.power(semidihedral.t, 3));  // 2^(n-1) - 1
        CHECK(semidihedral.power(semidihedral.t, 8) == semidihedral.identity);
        CHECK(semidihedral.power(semidihedral.s, 2) == semidihedral.identity);
    }
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(group_table({Family::A, 2, 7}), DomainError);
    CHECK_THROWS_AS(group_table({Family::A, 67, 1}), DomainError);
    CHECK_THROWS_AS(group_table({Family::C, 5, 2}), DomainError);
    CHECK_NOTHROW(group_table({Family::A, 2, 6}));
    CHECK_NOTHROW(group_table({Family::F, 2, 5}));
}

TEST_CASE("resolutions are complexes, exact, and minimal") {
    for (const auto& g : table_specs()) {
        if (group_order(g) > 32) continue;  // keep the exhaustive loop quick
        CAPTURE(describe(g));
        MinimalResolution res = minimal_resolution(g, 5);
        const std::uint32_t N = res.table.order;
        REQUIRE(res.betti.size() == 6);
        REQUIRE(res.differentials.size() == 5);
        CHECK(res.betti[0] == 1);

        FpMatrix aug(res.p, 1, N);
        for (std::uint32_t h = 0; h < N; ++h) aug.set(0, h, 1);
        FpMatrix zero_aug = matrix_product(aug, res.differentials[0]);
        for (std::size_t c = 0; c < zero_aug.cols(); ++c)
            CHECK(zero_aug.at(0, c) == 0);

        for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
            FpMatrix square =
                matrix_product(res.differentials[i], res.differentials[i + 1]);
            bool all_zero = true;
            for (std::size_t r = 0; r < square.rows(); ++r)
                for (std::size_t c = 0; c < square.cols(); ++c)
                    if (square.at(r, c) != 0) all_zero = false;
            CHECK(all_zero);

            // exactness: the image of each step fills the kernel of the last
            CHECK(rank(res.differentials[i + 1]) ==
                  kernel_basis(res.differentials[i]).dim());
        }

        // minimality: every matrix entry lies in the augmentation ideal
        for (std::size_t i = 0; i < res.differentials.size(); ++i) {
            const FpMatrix& d = res.differentials[i];
            for (std::size_t col = 0; col < d.cols(); ++col)
                for (std::size_t r = 0; r < res.betti[i]; ++r)
                    CHECK(component_augmentation(d, col, r, N) == 0);
        }
    }
}

TEST_CASE("ranks match the graded dimensions of the presented rings") {
    {
        std::vector<std::size_t> betti = betti_numbers({Family::A, 2, 1}, 8);
        CHECK(betti == std::vector<std::size_t>(9, 1));
    }
    {
        std::vector<std::size_t> betti = betti_numbers({Family::B, 2, 1}, 8);
        CHECK(betti == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    }
    {
        // the rank-one quaternion group is periodic with period 4
        std::vector<std::size_t> betti = betti_numbers({Family::E, 2, 3}, 8);
        CHECK(betti == std::vector<std::size_t>{1, 2, 2, 1, 1, 2, 2, 1, 1});
    }
    {
        std::vector<std::size_t> betti = betti_numbers({Family::D, 2, 3}, 6);
        CHECK(betti == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
    }

    for (const auto& g : table_specs()) {
        if (group_order(g) > 32) continue;
        CAPTURE(describe(g));
        OracleReport report = oracle_check(g, 6);
        CHECK(report.pass);
        for (const auto& row : report.per_index) {
            CAPTURE(row.index);
            CHECK(row.betti == row.ring_dim);
        }
    }
    {
        OracleReport big = oracle_check({Family::A, 61, 1}, 4);
        CHECK(big.pass);
    }
}

TEST_CASE("augmentation ideal powers shrink to zero") {
    {
        GroupTable z4 = group_table({Family::A, 2, 2});
        CHECK(radical_filtration(z4, 2) ==
              std::vector<std::size_t>{4, 3, 2, 1, 0});
    }
    {
        GroupTable q8 = group_table({Family::E, 2, 3});
        std::vector<std::size_t> dims = radical_filtration(q8, 2);
        CHECK(dims.front() == 8);
        CHECK(dims.back() == 0);
        for (std::size_t i = 1; i < dims.size(); ++i)
            CHECK(dims[i] < dims[i - 1]);
    }
    {
        GroupTable z9 = group_table({Family::A, 3, 2});
        std::vector<std::size_t> dims = radical_filtration(z9, 3);
        CHECK(dims == std::vector<std::size_t>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
    }
}

TEST_CASE("census of oracle-sized instances") {
    std::vector<GroupSpec> census = oracle_census();
    for (const auto& g : census) {
        CHECK_NOTHROW(validate(g));
        CHECK(group_order(g) <= 64);
    }
    std::size_t cyclic_primes = 0;
    for (const auto& g : census)
        if (g.family == Family::A && g.n == 1) ++cyclic_primes;
    CHECK(cyclic_primes == 18);  // 2 through 61
    CHECK(std::count_if(census.begin(), census.end(), [](const GroupSpec& g) {
              return g.family == Family::E;
          }) == 4);
    CHECK(census.size() == 52);
}
