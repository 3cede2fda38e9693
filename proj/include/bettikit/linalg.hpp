#pragma once

#include "bettikit/field.hpp"
#include "bettikit/simplicial.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace bettikit {

/// Sparse matrix over a FieldSpec: (row, col, scalar) triples, no stored
/// zeros. Scalars are exact rationals; over GF(p) they are reduced mod p
/// when used.
struct FieldMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, Rational>> entries;
    FieldSpec field;

    void validate() const;  // index ranges, no zero scalars
};

/// Rank over the matrix's field. GF(p) uses word-sized elimination; the
/// rationals use fraction-free (Bareiss) elimination on the denominator-
/// cleared integer matrix. Dense below 512 columns, sparse above.
int rank(const FieldMatrix& m);

/// Chain complex of finite-dimensional vector spaces over a field,
/// indexed over the integers (degree -1 appears for augmented simplicial
/// complexes). diffs[i] maps degree lowest+i+1 to degree lowest+i.
struct ChainComplexK {
    FieldSpec field;
    int lowest = 0;
    std::vector<int> dims;
    std::vector<FieldMatrix> diffs;

    int dim_at(int n) const;
    void validate() const;     // matrix shapes match dims
    bool is_complex() const;   // consecutive differentials compose to zero
};

/// Simplicial boundary complex with the alternating-sign convention over
/// the stored vertex order; `reduced` appends the augmentation onto the
/// empty face in degree -1 (the empty complex then has just that k).
ChainComplexK boundary_matrices(const SimplicialComplex& k, FieldSpec field, bool reduced);

/// Homology dimensions per degree (only nonzero entries are returned).
/// Throws std::invalid_argument when c is not a complex.
std::map<int, int> homology_dims(const ChainComplexK& c);

/// Reduced simplicial homology dimensions; the empty complex yields {-1: 1}.
std::map<int, int> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field);

}  // namespace bettikit
