#pragma once

#include "bettikit/ideal.hpp"
#include "bettikit/multidegree.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bettikit {

/// Finite poset over string-identified elements, stored as the full
/// reflexive-transitive <= matrix. Covering relations and chain
/// enumeration are derived on demand; O(n^2) storage is fine at the
/// scales this library targets.
class Poset {
public:
    Poset() = default;

    /// `leq` must already be reflexive, antisymmetric and transitive.
    Poset(std::vector<std::string> ids, std::vector<std::vector<std::uint8_t>> leq);

    /// Builds from arbitrary relation pairs (covering or general); the
    /// transitive closure is applied. Throws on cycles (antisymmetry).
    static Poset from_relations(std::vector<std::string> ids,
                                const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& ids() const { return ids_; }
    int index_of(const std::string& id) const;  // -1 if absent

    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0; }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// Deterministic linear extension: repeatedly take the smallest-index
    /// element all of whose strict predecessors are already placed.
    std::vector<int> linear_extension() const;

    /// Covering relations (x, y): x < y with nothing strictly between.
    std::vector<std::pair<int, int>> covering_pairs() const;

    /// Induced subposet on `keep` (indices; ids retained, order preserved).
    Poset induced(const std::vector<int>& keep) const;

    bool operator==(const Poset&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<std::uint8_t>> leq_;
};

/// Poset with an order-preserving grading into Z^m. When built from
/// degrees it is a subposet of Z^m: the grading is injective and the
/// order is exactly componentwise <=.
class GradedPoset {
public:
    GradedPoset() = default;

    /// Validates that the grading is order-preserving.
    GradedPoset(Poset poset, int num_vars, std::vector<Multidegree> grades);

    /// Subposet of Z^m determined by the (distinct) degrees themselves.
    static GradedPoset from_degrees(int num_vars, std::vector<Multidegree> degrees,
                                    std::vector<std::string> ids);

    const Poset& poset() const { return poset_; }
    int num_vars() const { return num_vars_; }
    const Multidegree& grade(int i) const { return grades_.at(static_cast<std::size_t>(i)); }
    const std::vector<Multidegree>& grades() const { return grades_; }
    int size() const { return poset_.size(); }

    GradedPoset induced(const std::vector<int>& keep) const;

private:
    Poset poset_;
    int num_vars_ = 0;
    std::vector<Multidegree> grades_;
};

/// L(I) minus its formal bottom: all joins of nonempty subsets of the
/// generator degrees, ordered componentwise, graded by inclusion.
/// Elements are sorted by (total degree, lex) and named by their monomials.
GradedPoset lcm_lattice(const MonomialIdeal& ideal);

/// Induced subposet on {x | x < a} (grading restricted). Throws on an
/// unknown element.
GradedPoset open_filter(const GradedPoset& p, int a);
/// Same with {x | x <= a}.
GradedPoset closed_filter(const GradedPoset& p, int a);

Poset open_filter(const Poset& p, int a);
Poset closed_filter(const Poset& p, int a);

/// A_x: the minimal elements of P that are <= x.
std::vector<int> atoms_below(const Poset& p, int x);

/// True iff every x is the unique least upper bound of A_x within P.
bool is_atomic(const Poset& p);

/// The embedding sigma: P -> Sigma(A), x |-> A_x, of an atomic poset into
/// the Boolean lattice on its minimal elements.
struct BooleanEmbedding {
    std::vector<std::string> atoms;      // atom ids, in P element order
    std::vector<std::vector<int>> sets;  // per P element: sorted atom indices
};

/// M(P): the meet-closure of sigma(P) inside Sigma(A), with bottom {} and
/// top A always included, ordered by inclusion. The lattice is graded by
/// 0/1 atom-indicator vectors (num_vars = |A|).
struct MeetClosure {
    GradedPoset lattice;                  // element ids like "{}", "{ac,bd}"
    BooleanEmbedding sigma;               // embedding of the input poset
    std::vector<int> embedding;           // input element -> lattice index
    std::vector<std::uint64_t> masks;     // lattice element -> atom bitmask
    int bottom = -1;                      // index of {}
    int top = -1;                         // index of A
};

/// Requires P atomic (throws otherwise); at most 64 atoms.
MeetClosure meet_closure(const Poset& p);

/// Order isomorphism P -> Q as an index map, if one exists. Backtracking
/// with invariant pruning; deterministic for fixed inputs.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);

/// DOT digraph of the covering relations (edges point upward). Elements
/// whose ids are listed in `dashed` are drawn as dashed rounded boxes.
std::string hasse_dot(const Poset& p, const std::set<std::string>& dashed = {});

}  // namespace bettikit
