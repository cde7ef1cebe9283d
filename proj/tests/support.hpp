#pragma once

#include <cstdint>
#include <vector>

#include "esscoh/presentation.hpp"

namespace testsupport {

// splitmix64; fixed seeds keep runs reproducible across platforms
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next() % n);
    }
};

inline esscoh::Element random_homogeneous(const esscoh::Presentation& P, int d,
                                          Rng& rng) {
    const std::size_t dim = P.hilbert_dimension(d);
    std::vector<std::uint32_t> coords(dim);
    for (std::uint32_t& c : coords) c = rng.below(P.p());
    return P.from_coordinates(d, coords);
}

}  // namespace testsupport
