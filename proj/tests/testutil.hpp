// Shared helpers for the test suites: the paper's running examples and a
// deterministic random-ideal generator.
#pragma once

#include "bettikit/ideal.hpp"

#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testutil {

using bettikit::MonomialIdeal;
using bettikit::Multidegree;

// I = (ac, ae, bd, de) in k[a..e]
inline MonomialIdeal ideal_I() {
    return bettikit::parse_ideal("variables: a,b,c,d,e; a*c, a*e, b*d, d*e");
}

// J = (wx, xy, wz, yz) in k[w..z]
inline MonomialIdeal ideal_J() {
    return bettikit::parse_ideal("variables: w,x,y,z; w*x, x*y, w*z, y*z");
}

/// Random ideal with up to max_gens generators, up to max_vars variables
/// and exponents <= max_exp. Returns nullopt when the draw degenerates.
inline std::optional<MonomialIdeal> random_ideal(std::mt19937& rng, int max_gens = 5,
                                                 int max_vars = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nv(2, max_vars), ng(2, max_gens), exp(0, max_exp);
    const int vars = nv(rng), gens = ng(rng);
    std::set<Multidegree> drawn;
    for (int attempts = 0; static_cast<int>(drawn.size()) < gens && attempts < 50; ++attempts) {
        Multidegree d(static_cast<std::size_t>(vars));
        bool nonzero = false;
        for (int i = 0; i < vars; ++i) {
            d[static_cast<std::size_t>(i)] = exp(rng);
            if (d[static_cast<std::size_t>(i)] > 0) nonzero = true;
        }
        if (nonzero) drawn.insert(std::move(d));
    }
    if (drawn.empty()) return std::nullopt;
    return MonomialIdeal(vars, {drawn.begin(), drawn.end()});
}

}  // namespace testutil
