#pragma once

#include "bettikit/free_complex.hpp"
#include "bettikit/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bettikit {

/// beta_{d,alpha}(I) = dim H~_{d-1}(Delta((L(I)\0)_{<alpha}); k) for every
/// alpha in L(I)\0; zero elsewhere. The per-degree interval computations
/// are independent; the default entry point runs them in parallel, the
/// _serial variant is the reference loop kept for testing.
BettiTable betti_numbers(const MonomialIdeal& ideal, FieldSpec field);
BettiTable betti_numbers_serial(const MonomialIdeal& ideal, FieldSpec field);

/// Advanced entry point: same interval formula over a caller-supplied
/// P. Only P <= deg(I) (and matching ambient dimension) is validated;
/// correctness additionally requires B(I,k) <= P, which is not checkable
/// from the input alone.
BettiTable betti_numbers_on(const GradedPoset& p, const MonomialIdeal& ideal, FieldSpec field);

struct BettiPosetResult {
    GradedPoset poset;  // induced subposet of L(I)\0 on the Betti degrees
    FieldSpec field;
    BettiTable table;
};

/// B(I,k): the subposet of L(I)\0 on {alpha | beta_{d,alpha} != 0 for some d}.
BettiPosetResult betti_poset(const MonomialIdeal& ideal, FieldSpec field);

/// The Betti lattice M(B(I,k)): meet-closure of the Betti poset inside
/// the Boolean lattice on the generator degrees.
MeetClosure betti_lattice(const MonomialIdeal& ideal, FieldSpec field);

struct BettiWitness {
    std::vector<std::string> atoms;  // atom ids of the violating element of M(P)\0
    bool in_poset = false;           // true: in P but interval homology vanishes;
                                     // false: missing from P with nonvanishing homology
};

struct CheckBettiResult {
    bool verdict = false;
    std::vector<BettiWitness> witnesses;
    std::optional<MonomialIdeal> realizing_ideal;
};

/// Decides whether the finite atomic poset P is the Betti poset of a
/// monomial ideal over the field: for every x in M(P)\0, x lies outside P
/// exactly when H~(Delta(M(P)_{<x}\0); k) vanishes in all degrees. On a
/// positive verdict the realizing ideal of M(P) is returned. Throws when
/// P is not atomic.
CheckBettiResult check_betti_poset(const Poset& p, FieldSpec field);

/// Realizes a finite atomic lattice (with bottom and top) as the
/// lcm-lattice of a monomial ideal: one variable per element of L\0, and
/// for each atom a the generator prod{ x_p : p not >= a }. The
/// lcm-lattice of the result, with bottom restored, is isomorphic to L.
MonomialIdeal realize_atomic_lattice(const Poset& lattice);

struct HomologyIsoReport {
    bool ok = true;
    std::string message;
    std::optional<Multidegree> degree;  // first mismatching alpha
};

/// Checks that for every alpha in B(I,k) the inclusion
/// Delta(B_{<alpha}) <= Delta((L\0)_{<alpha}) is a homology isomorphism,
/// by comparing reduced homology dimension vectors.
HomologyIsoReport verify_homology_iso(const MonomialIdeal& ideal, FieldSpec field);

}  // namespace bettikit
