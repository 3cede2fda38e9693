#pragma once

#include "bettikit/ideal.hpp"
#include "bettikit/linalg.hpp"
#include "bettikit/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bettikit {

using SparseScalars = std::vector<std::tuple<int, int, Rational>>;

/// Multigraded free chain complex over R = k[x_1..x_m]. Differential
/// entries store only the scalar; the monomial factor is always implied
/// by the degree difference of the two basis elements, so homogeneity
/// (target degree divides source degree) is enforced structurally.
/// The augmentation is canonical: a degree-0 basis element b maps to
/// x^{deg b}.
struct FreeComplex {
    int num_vars = 0;
    std::vector<std::vector<Multidegree>> basis;  // basis[n] = degrees in homological degree n
    std::vector<SparseScalars> diffs;             // diffs[n-1]: basis[n] -> basis[n-1], (row, col, scalar)

    std::vector<int> ranks() const;
    int top_degree() const { return static_cast<int>(basis.size()) - 1; }

    /// Index ranges, no zero scalars, homogeneity, degree lengths.
    void validate() const;
};

/// The Taylor complex of I: degree-k basis is the (k+1)-subsets of the
/// generators (lex order), graded by the join of their members, with the
/// simplicial boundary as differential.
FreeComplex taylor_complex(const MonomialIdeal& ideal);

/// The homogenized order complex of P: degree-n basis is the n-faces of
/// Delta(P) graded by the apex, with simplicial boundary signs. Requires
/// the grading of P to land in deg(I) and the ambient dimensions to match.
/// With B(I,k) <= P <= deg(I) this is a free resolution of I.
FreeComplex order_complex_resolution(const GradedPoset& p, const MonomialIdeal& ideal);

/// Based complex of k-vector spaces whose basis elements carry labels in
/// a poset; differential entries may only point downward in the label
/// order. Homogenization shifts each basis element to the grade of its
/// label.
struct LabeledComplex {
    std::vector<std::vector<int>> labels;  // labels[n][b] = poset element index
    std::vector<SparseScalars> diffs;
};

FreeComplex homogenize_frame(const LabeledComplex& c, const GradedPoset& p);

/// P-sample of a free complex whose basis degrees all lie in the image of
/// the (injective) grading of P; inverse direction of homogenize_frame.
LabeledComplex sample_complex(const FreeComplex& f, const GradedPoset& p);

/// Multigraded strand of F in degree a: spanned per homological degree by
/// the basis elements with degree <= a, with the stored scalars as
/// differential. When `augment_onto` is given and a lies in deg(I), the
/// augmentation to k is included in degree -1 (the reduced strand used
/// for resolution checking).
ChainComplexK strand(const FreeComplex& f, const Multidegree& a, FieldSpec field,
                     const MonomialIdeal* augment_onto = nullptr);

struct VerifyReport {
    bool ok = true;
    std::string message;
    std::optional<Multidegree> degree;         // first failing strand degree
    std::optional<int> homological_degree;
};

/// Checks that F is a free resolution of I over the field: the scalar
/// differentials compose to zero and every strand in the join-closure of
/// {basis degrees} u {generator degrees} is exact onto I. Exactness at
/// every other multidegree follows because strands are constant between
/// consecutive join-closure points (the retained basis at any a equals
/// the one at the join of the closure points below a).
VerifyReport is_resolution_of(const FreeComplex& f, const MonomialIdeal& ideal, FieldSpec field);
VerifyReport is_resolution_of_serial(const FreeComplex& f, const MonomialIdeal& ideal, FieldSpec field);

/// True iff no nonzero scalar connects basis elements of equal degree
/// (all differential entries lie in the maximal ideal).
bool is_minimal(const FreeComplex& f);

/// Cancels unit entries (equal-degree nonzero scalars) by basis changes
/// until none remain, yielding a homotopy-equivalent complex. Pivots are
/// chosen lowest homological degree first, then first entry in a
/// deterministic scan, so the output is reproducible.
FreeComplex minimalize(const FreeComplex& f, FieldSpec field);

/// beta_{d,alpha} table; only nonzero entries are stored.
struct BettiTable {
    std::map<std::pair<int, Multidegree>, long long> beta;

    std::vector<long long> totals() const;
    long long total_at(int d) const;
    bool operator==(const BettiTable&) const = default;
};

/// Betti numbers of the module F resolves, read off as the homology of
/// F (x) R/m: per multidegree alpha keep the basis elements of degree
/// exactly alpha and the equal-degree scalar entries. For a resolution F
/// of I this is dim Tor_d(I, R/m)_alpha.
BettiTable tor_betti(const FreeComplex& f, FieldSpec field);

/// Order isomorphism between two finite sets of multidegrees, used to
/// transport resolutions across a Betti-poset isomorphism.
struct DegreeMap {
    int target_num_vars = 0;
    std::vector<std::pair<Multidegree, Multidegree>> pairs;

    void validate() const;  // bijectivity and order-isomorphism on the listed degrees
    const Multidegree& apply(const Multidegree& a) const;
};

/// Replaces every basis degree by its image under the isomorphism and
/// keeps every scalar entry; the ambient dimension becomes the map's
/// target dimension.
FreeComplex relabel(const FreeComplex& f, const DegreeMap& iso);

}  // namespace bettikit
