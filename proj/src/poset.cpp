#include "bettikit/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bettikit {

Poset::Poset(std::vector<std::string> ids, std::vector<std::vector<std::uint8_t>> leq)
    : ids_(std::move(ids)), leq_(std::move(leq)) {
    const std::size_t n = ids_.size();
    if (leq_.size() != n) throw std::invalid_argument("leq matrix size mismatch");
    for (const auto& row : leq_)
        if (row.size() != n) throw std::invalid_argument("leq matrix size mismatch");
    {
        std::set<std::string> seen(ids_.begin(), ids_.end());
        if (seen.size() != n) throw std::invalid_argument("duplicate element ids");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i][i]) throw std::invalid_argument("leq not reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw std::invalid_argument("leq not antisymmetric");
            if (!leq_[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq_[j][k] && !leq_[i][k])
                    throw std::invalid_argument("leq not transitive");
        }
    }
}

Poset Poset::from_relations(std::vector<std::string> ids,
                            const std::vector<std::pair<int, int>>& pairs) {
    const std::size_t n = ids.size();
    std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n))
            throw std::invalid_argument("relation index out of range");
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq[i][j] && leq[j][i])
                throw std::invalid_argument("relations contain a cycle through '" + ids[i] + "'");
    return Poset(std::move(ids), std::move(leq));
}

int Poset::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < size(); ++j)
            if (lt(j, i)) { minimal = false; break; }
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < size(); ++j)
            if (lt(i, j)) { maximal = false; break; }
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::linear_extension() const {
    const int n = size();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            if (placed[static_cast<std::size_t>(i)]) continue;
            bool ready = true;
            for (int j = 0; j < n; ++j)
                if (!placed[static_cast<std::size_t>(j)] && lt(j, i)) { ready = false; break; }
            if (ready) pick = i;
        }
        placed[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
    }
    return order;
}

std::vector<std::pair<int, int>> Poset::covering_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (!lt(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < size(); ++k)
                if (lt(i, k) && lt(k, j)) { cover = false; break; }
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

Poset Poset::induced(const std::vector<int>& keep) const {
    std::vector<std::string> ids;
    ids.reserve(keep.size());
    for (int i : keep) ids.push_back(id(i));
    std::vector<std::vector<std::uint8_t>> sub(keep.size(), std::vector<std::uint8_t>(keep.size(), 0));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            sub[a][b] = leq(keep[a], keep[b]) ? 1 : 0;
    return Poset(std::move(ids), std::move(sub));
}

GradedPoset::GradedPoset(Poset poset, int num_vars, std::vector<Multidegree> grades)
    : poset_(std::move(poset)), num_vars_(num_vars), grades_(std::move(grades)) {
    if (static_cast<int>(grades_.size()) != poset_.size())
        throw std::invalid_argument("grading must cover every element");
    for (const auto& g : grades_)
        if (static_cast<int>(g.size()) != num_vars_)
            throw std::invalid_argument("grading dimension mismatch");
    for (int i = 0; i < poset_.size(); ++i)
        for (int j = 0; j < poset_.size(); ++j)
            if (poset_.leq(i, j) && !divides(grades_[static_cast<std::size_t>(i)], grades_[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("grading is not order-preserving");
}

GradedPoset GradedPoset::from_degrees(int num_vars, std::vector<Multidegree> degrees,
                                      std::vector<std::string> ids) {
    const std::size_t n = degrees.size();
    {
        std::set<Multidegree> seen(degrees.begin(), degrees.end());
        if (seen.size() != n) throw std::invalid_argument("subposet of Z^m needs distinct degrees");
    }
    std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i][j] = divides(degrees[i], degrees[j]) ? 1 : 0;
    return GradedPoset(Poset(std::move(ids), std::move(leq)), num_vars, std::move(degrees));
}

GradedPoset GradedPoset::induced(const std::vector<int>& keep) const {
    std::vector<Multidegree> grades;
    grades.reserve(keep.size());
    for (int i : keep) grades.push_back(grade(i));
    return GradedPoset(poset_.induced(keep), num_vars_, std::move(grades));
}

GradedPoset lcm_lattice(const MonomialIdeal& ideal) {
    std::set<Multidegree> closure(ideal.generators().begin(), ideal.generators().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Multidegree> current(closure.begin(), closure.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (closure.insert(join(current[i], current[j])).second) grew = true;
    }
    std::vector<Multidegree> degrees(closure.begin(), closure.end());
    std::sort(degrees.begin(), degrees.end(), degree_less);
    std::vector<std::string> ids;
    ids.reserve(degrees.size());
    for (const auto& d : degrees) ids.push_back(monomial_string(d, ideal.var_names()));
    return GradedPoset::from_degrees(ideal.num_vars(), std::move(degrees), std::move(ids));
}

namespace {
std::vector<int> filter_indices(const Poset& p, int a, bool strict) {
    if (a < 0 || a >= p.size()) throw std::invalid_argument("unknown element");
    std::vector<int> keep;
    for (int i = 0; i < p.size(); ++i)
        if (strict ? p.lt(i, a) : p.leq(i, a)) keep.push_back(i);
    return keep;
}
}  // namespace

GradedPoset open_filter(const GradedPoset& p, int a) { return p.induced(filter_indices(p.poset(), a, true)); }
GradedPoset closed_filter(const GradedPoset& p, int a) { return p.induced(filter_indices(p.poset(), a, false)); }
Poset open_filter(const Poset& p, int a) { return p.induced(filter_indices(p, a, true)); }
Poset closed_filter(const Poset& p, int a) { return p.induced(filter_indices(p, a, false)); }

std::vector<int> atoms_below(const Poset& p, int x) {
    if (x < 0 || x >= p.size()) throw std::invalid_argument("unknown element");
    std::vector<int> out;
    for (int a : p.minimal_elements())
        if (p.leq(a, x)) out.push_back(a);
    return out;
}

bool is_atomic(const Poset& p) {
    const auto atoms = p.minimal_elements();
    for (int x = 0; x < p.size(); ++x) {
        std::vector<int> ax;
        for (int a : atoms)
            if (p.leq(a, x)) ax.push_back(a);
        // x must be below every upper bound of A_x
        for (int y = 0; y < p.size(); ++y) {
            bool upper = true;
            for (int a : ax)
                if (!p.leq(a, y)) { upper = false; break; }
            if (upper && !p.leq(x, y)) return false;
        }
    }
    return true;
}

namespace {
std::string mask_id(std::uint64_t mask, const std::vector<std::string>& atom_ids) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < atom_ids.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) out += ",";
        out += atom_ids[i];
        first = false;
    }
    return out + "}";
}
}  // namespace

MeetClosure meet_closure(const Poset& p) {
    if (!is_atomic(p)) throw std::invalid_argument("meet_closure requires an atomic poset");
    const auto atoms = p.minimal_elements();
    if (atoms.size() > 64) throw std::invalid_argument("meet_closure supports at most 64 atoms");

    MeetClosure out;
    out.sigma.atoms.reserve(atoms.size());
    for (int a : atoms) out.sigma.atoms.push_back(p.id(a));

    std::vector<std::uint64_t> sigma_masks(static_cast<std::size_t>(p.size()), 0);
    for (int x = 0; x < p.size(); ++x) {
        std::vector<int> set;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (p.leq(atoms[k], x)) {
                sigma_masks[static_cast<std::size_t>(x)] |= std::uint64_t{1} << k;
                set.push_back(static_cast<int>(k));
            }
        out.sigma.sets.push_back(std::move(set));
    }

    // close sigma(P) under pairwise intersection; bottom {} and the empty
    // meet A are always included
    std::set<std::uint64_t> masks(sigma_masks.begin(), sigma_masks.end());
    const std::uint64_t full = atoms.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << atoms.size()) - 1;
    masks.insert(0);
    masks.insert(full);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> current(masks.begin(), masks.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (masks.insert(current[i] & current[j]).second) grew = true;
    }

    std::vector<std::uint64_t> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    std::vector<std::string> ids;
    std::vector<Multidegree> grades;
    for (std::uint64_t m : sorted) {
        ids.push_back(mask_id(m, out.sigma.atoms));
        Multidegree g(atoms.size(), 0);
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (m >> k & 1) g[k] = 1;
        grades.push_back(std::move(g));
    }
    out.lattice = GradedPoset::from_degrees(static_cast<int>(atoms.size()),
                                            std::move(grades), std::move(ids));
    out.masks = sorted;
    std::map<std::uint64_t, int> where;
    for (std::size_t i = 0; i < sorted.size(); ++i) where[sorted[i]] = static_cast<int>(i);
    out.bottom = where.at(0);
    out.top = where.at(full);
    for (int x = 0; x < p.size(); ++x)
        out.embedding.push_back(where.at(sigma_masks[static_cast<std::size_t>(x)]));
    return out;
}

namespace {

// Refined per-element invariant used to prune the isomorphism search.
struct ElemInvariant {
    int below = 0, above = 0, covers_up = 0, covers_down = 0, atoms = 0;
    auto operator<=>(const ElemInvariant&) const = default;
};

std::vector<ElemInvariant> invariants(const Poset& p) {
    std::vector<ElemInvariant> inv(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (p.lt(j, i)) ++inv[static_cast<std::size_t>(i)].below;
            if (p.lt(i, j)) ++inv[static_cast<std::size_t>(i)].above;
        }
    for (auto [i, j] : p.covering_pairs()) {
        ++inv[static_cast<std::size_t>(i)].covers_up;
        ++inv[static_cast<std::size_t>(j)].covers_down;
    }
    for (int i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(i)].atoms = static_cast<int>(atoms_below(p, i).size());
    return inv;
}

bool extend_isomorphism(const Poset& p, const Poset& q,
                        const std::vector<ElemInvariant>& ip, const std::vector<ElemInvariant>& iq,
                        std::vector<int>& map, std::vector<char>& used, int next) {
    if (next == p.size()) return true;
    for (int cand = 0; cand < q.size(); ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (ip[static_cast<std::size_t>(next)] != iq[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            int pc = map[static_cast<std::size_t>(prev)];
            ok = (p.leq(prev, next) == q.leq(pc, cand)) && (p.leq(next, prev) == q.leq(cand, pc));
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = 1;
        if (extend_isomorphism(p, q, ip, iq, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    auto ip = invariants(p), iq = invariants(q);
    {
        auto sp = ip, sq = iq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(p.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(q.size()), 0);
    if (extend_isomorphism(p, q, ip, iq, map, used, 0)) return map;
    return std::nullopt;
}

std::string hasse_dot(const Poset& p, const std::set<std::string>& dashed) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int i = 0; i < p.size(); ++i) {
        os << "  n" << i << " [label=\"" << p.id(i) << "\"";
        if (dashed.count(p.id(i)))
            os << ", shape=box, style=\"rounded,dashed\"";
        os << "];\n";
    }
    for (auto [i, j] : p.covering_pairs())
        os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bettikit
