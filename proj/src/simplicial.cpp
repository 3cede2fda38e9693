#include "bettikit/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bettikit {

long long SimplicialComplex::face_count() const {
    long long n = 0;
    for (const auto& level : faces) n += static_cast<long long>(level.size());
    return n;
}

void SimplicialComplex::validate() const {
    std::set<std::vector<int>> all;
    for (std::size_t n = 0; n < faces.size(); ++n) {
        for (const auto& f : faces[n]) {
            if (f.size() != n + 1) throw std::invalid_argument("face dimension mismatch");
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] < 0 || f[i] >= static_cast<int>(vertices.size()))
                    throw std::invalid_argument("face vertex out of range");
                if (i + 1 < f.size() && f[i] >= f[i + 1])
                    throw std::invalid_argument("face vertices must strictly increase");
            }
            if (!all.insert(f).second) throw std::invalid_argument("duplicate face");
        }
    }
    for (std::size_t n = 1; n < faces.size(); ++n)
        for (const auto& f : faces[n])
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> facet;
                for (std::size_t k = 0; k < f.size(); ++k)
                    if (k != i) facet.push_back(f[k]);
                if (!all.count(facet)) throw std::invalid_argument("complex not closed under subsets");
            }
}

SimplicialComplex order_complex(const Poset& p) {
    const auto ext = p.linear_extension();
    const int n = p.size();

    SimplicialComplex k;
    k.vertices.reserve(static_cast<std::size_t>(n));
    for (int v : ext) k.vertices.push_back(p.id(v));

    // successors of each vertex in extension order; extending a chain past
    // its maximum keeps it a chain
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.lt(ext[static_cast<std::size_t>(i)], ext[static_cast<std::size_t>(j)]))
                above[static_cast<std::size_t>(i)].push_back(j);

    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        const int dim = static_cast<int>(chain.size()) - 1;
        if (dim >= static_cast<int>(k.faces.size())) k.faces.emplace_back();
        k.faces[static_cast<std::size_t>(dim)].push_back(chain);
        for (int next : above[static_cast<std::size_t>(last)]) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (int start = 0; start < n; ++start) {
        chain.assign(1, start);
        extend(extend, start);
    }
    return k;
}

}  // namespace bettikit
