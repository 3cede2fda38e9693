#pragma once

#include "bettikit/poset.hpp"

#include <string>
#include <vector>

namespace bettikit {

/// Abstract simplicial complex with a fixed total order on the vertices.
/// faces[n] lists the n-faces as strictly increasing vertex-index tuples;
/// that order is the orientation used by the boundary maps.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::vector<int>>> faces;  // faces[n][k] has n+1 entries

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    long long face_count() const;

    /// Checks closure under subsets and strict monotonicity of each face.
    void validate() const;
};

/// Order complex Delta(P): n-faces are the (n+1)-element chains of P,
/// oriented by a fixed deterministic linear extension of P. The apex
/// (maximum) of each face is its last vertex.
SimplicialComplex order_complex(const Poset& p);

}  // namespace bettikit
