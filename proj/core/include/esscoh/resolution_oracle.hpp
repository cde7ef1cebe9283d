#pragma once

#include <cstdint>
#include <vector>

#include "esscoh/catalog.hpp"
#include "esscoh/fp_linalg.hpp"

namespace esscoh {

// Multiplication table of the group, elements in the normal form t^a s^b
// (index b * t_order + a). For cyclic groups s is the identity.
struct GroupTable {
    std::uint32_t order = 1;
    std::uint32_t identity = 0;
    std::uint32_t t = 0;
    std::uint32_t s = 0;
    std::vector<std::uint32_t> mul;  // order x order, row major

    std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
};

// Orders above 64 are rejected: the oracle is meant for exhaustive checking.
GroupTable group_table(const GroupSpec& g);

// Minimal free resolution of k over the group algebra kG. betti[i] is the
// rank of the i-th module; differentials[i] is the linear map from module
// i+1 to module i, a (betti[i] * order) x (betti[i+1] * order) matrix.
// Ranks are read off with Nakayama: new generators complete the radical
// (t - 1)K + (s - 1)K of each kernel K.
struct MinimalResolution {
    std::uint32_t p = 2;
    GroupTable table;
    std::vector<std::size_t> betti;
    std::vector<FpMatrix> differentials;
};

MinimalResolution minimal_resolution(const GroupSpec& g, int max_index);

std::vector<std::size_t> betti_numbers(const GroupSpec& g, int max_index);

// Dimensions of the powers of the augmentation ideal, I^0 = kG down to 0.
// The chain is strictly decreasing; its finiteness is what makes the
// generator-completion step valid.
std::vector<std::size_t> radical_filtration(const GroupTable& table,
                                            std::uint32_t p);

struct OracleRow {
    int index = 0;
    std::size_t betti = 0;
    std::size_t ring_dim = 0;
    bool equal = true;
};

struct OracleReport {
    GroupSpec spec;
    std::vector<OracleRow> per_index;
    bool pass = true;
};

// Compares resolution ranks against the graded dimensions of the
// presented cohomology ring.
OracleReport oracle_check(const GroupSpec& g, int max_index);

// Every catalog spec the table oracle accepts: all instances of order
// at most 64.
std::vector<GroupSpec> oracle_census();

}  // namespace esscoh
