#include "polyinv/mixed_volume.hpp"

#include "polyinv/error.hpp"
#include "polyinv/laurent.hpp"

#include <cstdint>

namespace polyinv {

namespace {

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

Integer mixed_volume_normalized(const PolytopeTuple& tuple) {
    const std::size_t d = tuple.size();
    if (d == 0) {
        throw InputError("mixed volume of an empty tuple");
    }
    if (d > 20) {
        throw InputError("mixed volume tuple too long");
    }
    for (const auto& p : tuple) {
        if (p.ambient_dim() != d) {
            throw InputError("mixed volume needs " + std::to_string(d) + " polytopes in dimension " +
                             std::to_string(d) + ", got one of dimension " + std::to_string(p.ambient_dim()));
        }
        if (p.empty()) {
            throw InputError("mixed volume of an empty polytope");
        }
    }

    const std::uint32_t full = (1u << d) - 1;
    std::vector<LatticePolytope> sums(full + 1);
    Integer alternating = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        const std::uint32_t rest = mask & (mask - 1);
        sums[mask] = rest == 0 ? tuple[low] : minkowski_sum(sums[rest], tuple[low]);
        const Integer vol = normalized_volume(sums[mask]);
        const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
        if ((d - size) % 2 == 0) {
            alternating += vol;
        } else {
            alternating -= vol;
        }
    }
    const Integer fact = factorial(d);
    if (alternating % fact != 0 || alternating < 0) {
        throw Error("internal: inclusion-exclusion produced a non-integral mixed volume");
    }
    return alternating / fact;
}

Integer bkk_count(const PolySystem& system) {
    const std::size_t n = system.num_vars();
    if (system.size() != n) {
        throw InputError("BKK count needs a square system, got " + std::to_string(system.size()) +
                         " polynomials in " + std::to_string(n) + " variables");
    }
    PolytopeTuple tuple;
    for (const auto& p : system.polys()) {
        if (p.is_zero()) {
            throw InputError("BKK count of a system containing the zero polynomial");
        }
        tuple.push_back(newton_polytope(p));
    }
    return mixed_volume_normalized(tuple);
}

}  // namespace polyinv
