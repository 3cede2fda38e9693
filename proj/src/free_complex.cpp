#include "bettikit/free_complex.hpp"

#include "bettikit/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bettikit {

std::vector<int> FreeComplex::ranks() const {
    std::vector<int> out;
    out.reserve(basis.size());
    for (const auto& level : basis) out.push_back(static_cast<int>(level.size()));
    return out;
}

void FreeComplex::validate() const {
    if (num_vars <= 0) throw std::invalid_argument("free complex needs a positive ambient dimension");
    for (const auto& level : basis)
        for (const auto& d : level)
            if (static_cast<int>(d.size()) != num_vars)
                throw std::invalid_argument("basis degree dimension mismatch");
    if (basis.empty() ? !diffs.empty() : diffs.size() + 1 != basis.size())
        throw std::invalid_argument("free complex needs one differential per consecutive pair");
    for (std::size_t n = 0; n < diffs.size(); ++n) {
        const auto& lower = basis[n];
        const auto& upper = basis[n + 1];
        for (const auto& [r, c, v] : diffs[n]) {
            if (r < 0 || r >= static_cast<int>(lower.size()) || c < 0 || c >= static_cast<int>(upper.size()))
                throw std::invalid_argument("differential entry out of range");
            if (v == 0) throw std::invalid_argument("stored zero scalar");
            if (!divides(lower[static_cast<std::size_t>(r)], upper[static_cast<std::size_t>(c)]))
                throw std::invalid_argument("differential entry violates homogeneity");
        }
    }
}

namespace {

// (k+1)-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SparseScalars simplicial_scalars(const std::vector<std::vector<int>>& lower,
                                 const std::vector<std::vector<int>>& upper) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    SparseScalars entries;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& f = upper[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> facet;
            facet.reserve(f.size() - 1);
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != i) facet.push_back(f[t]);
            entries.emplace_back(index.at(facet), static_cast<int>(j), Rational(i % 2 == 0 ? 1 : -1));
        }
    }
    return entries;
}

}  // namespace

FreeComplex taylor_complex(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    const int n = static_cast<int>(gens.size());
    FreeComplex f;
    f.num_vars = ideal.num_vars();
    std::vector<std::vector<std::vector<int>>> faces;
    for (int k = 0; k < n; ++k) {
        faces.push_back(subsets_of_size(n, k + 1));
        std::vector<Multidegree> degs;
        degs.reserve(faces.back().size());
        for (const auto& face : faces.back()) {
            Multidegree d = gens[static_cast<std::size_t>(face[0])];
            for (std::size_t i = 1; i < face.size(); ++i)
                d = join(d, gens[static_cast<std::size_t>(face[i])]);
            degs.push_back(std::move(d));
        }
        f.basis.push_back(std::move(degs));
        if (k > 0) f.diffs.push_back(simplicial_scalars(faces[static_cast<std::size_t>(k - 1)],
                                                        faces[static_cast<std::size_t>(k)]));
    }
    f.validate();
    return f;
}

FreeComplex order_complex_resolution(const GradedPoset& p, const MonomialIdeal& ideal) {
    if (p.num_vars() != ideal.num_vars())
        throw std::invalid_argument("poset is not graded into the ideal's Z^m");
    for (int i = 0; i < p.size(); ++i)
        if (!in_degree_support(ideal, p.grade(i)))
            throw std::invalid_argument("poset element '" + p.poset().id(i) + "' lies outside deg(I)");

    const SimplicialComplex delta = order_complex(p.poset());
    // vertex v of delta corresponds to poset element ext[v]
    const auto ext = p.poset().linear_extension();

    FreeComplex f;
    f.num_vars = ideal.num_vars();
    for (std::size_t n = 0; n < delta.faces.size(); ++n) {
        std::vector<Multidegree> degs;
        degs.reserve(delta.faces[n].size());
        for (const auto& face : delta.faces[n])
            degs.push_back(p.grade(ext[static_cast<std::size_t>(face.back())]));  // apex grade
        f.basis.push_back(std::move(degs));
        if (n > 0) f.diffs.push_back(simplicial_scalars(delta.faces[n - 1], delta.faces[n]));
    }
    f.validate();
    return f;
}

FreeComplex homogenize_frame(const LabeledComplex& c, const GradedPoset& p) {
    if (c.labels.empty() ? !c.diffs.empty() : c.diffs.size() + 1 != c.labels.size())
        throw std::invalid_argument("labeled complex needs one differential per consecutive pair");
    FreeComplex f;
    f.num_vars = p.num_vars();
    for (const auto& level : c.labels) {
        std::vector<Multidegree> degs;
        degs.reserve(level.size());
        for (int label : level) {
            if (label < 0 || label >= p.size()) throw std::invalid_argument("label out of range");
            degs.push_back(p.grade(label));
        }
        f.basis.push_back(std::move(degs));
    }
    for (std::size_t n = 0; n < c.diffs.size(); ++n) {
        SparseScalars entries;
        for (const auto& [r, c2, v] : c.diffs[n]) {
            if (v == 0) continue;
            if (r < 0 || r >= static_cast<int>(c.labels[n].size()) || c2 < 0 ||
                c2 >= static_cast<int>(c.labels[n + 1].size()))
                throw std::invalid_argument("differential entry out of range");
            if (!p.poset().leq(c.labels[n][static_cast<std::size_t>(r)],
                               c.labels[n + 1][static_cast<std::size_t>(c2)]))
                throw std::invalid_argument("differential entry violates the label order");
            entries.emplace_back(r, c2, v);
        }
        f.diffs.push_back(std::move(entries));
    }
    f.validate();
    return f;
}

LabeledComplex sample_complex(const FreeComplex& f, const GradedPoset& p) {
    std::map<Multidegree, int> where;
    for (int i = 0; i < p.size(); ++i) where[p.grade(i)] = i;
    LabeledComplex c;
    for (const auto& level : f.basis) {
        std::vector<int> labels;
        labels.reserve(level.size());
        for (const auto& d : level) {
            auto it = where.find(d);
            if (it == where.end())
                throw std::invalid_argument("basis degree outside the sampling poset");
            labels.push_back(it->second);
        }
        c.labels.push_back(std::move(labels));
    }
    c.diffs = f.diffs;
    return c;
}

ChainComplexK strand(const FreeComplex& f, const Multidegree& a, FieldSpec field,
                     const MonomialIdeal* augment_onto) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw std::invalid_argument("strand degree dimension mismatch");
    const bool augment = augment_onto != nullptr && in_degree_support(*augment_onto, a);

    // retained basis indices per homological degree, and their new positions
    std::vector<std::vector<int>> keep(f.basis.size());
    std::vector<std::map<int, int>> pos(f.basis.size());
    int top = -1;
    for (std::size_t n = 0; n < f.basis.size(); ++n) {
        for (std::size_t b = 0; b < f.basis[n].size(); ++b)
            if (divides(f.basis[n][b], a)) {
                pos[n][static_cast<int>(b)] = static_cast<int>(keep[n].size());
                keep[n].push_back(static_cast<int>(b));
            }
        if (!keep[n].empty()) top = static_cast<int>(n);
    }

    ChainComplexK c;
    c.field = field;
    if (top < 0) {
        if (augment) {
            c.lowest = -1;
            c.dims = {1};
        }
        return c;
    }
    c.lowest = augment ? -1 : 0;
    if (augment) c.dims.push_back(1);
    for (int n = 0; n <= top; ++n) c.dims.push_back(static_cast<int>(keep[static_cast<std::size_t>(n)].size()));

    if (augment) {
        FieldMatrix aug;
        aug.field = field;
        aug.rows = 1;
        aug.cols = static_cast<int>(keep[0].size());
        for (int j = 0; j < aug.cols; ++j) aug.entries.emplace_back(0, j, Rational(1));
        c.diffs.push_back(std::move(aug));
    }
    for (int n = 1; n <= top; ++n) {
        FieldMatrix d;
        d.field = field;
        d.rows = static_cast<int>(keep[static_cast<std::size_t>(n - 1)].size());
        d.cols = static_cast<int>(keep[static_cast<std::size_t>(n)].size());
        for (const auto& [r, col, v] : f.diffs[static_cast<std::size_t>(n - 1)]) {
            auto itc = pos[static_cast<std::size_t>(n)].find(col);
            if (itc == pos[static_cast<std::size_t>(n)].end()) continue;
            // homogeneity: a retained source forces the target retained
            d.entries.emplace_back(pos[static_cast<std::size_t>(n - 1)].at(r), itc->second, v);
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

namespace {

std::string degree_string(const Multidegree& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

// All joins of nonempty subsets of the given degrees.
std::vector<Multidegree> join_closure(std::set<Multidegree> seed) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Multidegree> current(seed.begin(), seed.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (seed.insert(join(current[i], current[j])).second) grew = true;
    }
    std::vector<Multidegree> out(seed.begin(), seed.end());
    std::sort(out.begin(), out.end(), degree_less);
    return out;
}

struct StrandFailure {
    bool failed = false;
    int homological_degree = 0;
    std::string reason;
};

StrandFailure check_strand(const FreeComplex& f, const MonomialIdeal& ideal,
                           FieldSpec field, const Multidegree& a) {
    ChainComplexK s = strand(f, a, field, &ideal);
    if (!s.is_complex())
        return {true, 0, "strand differentials do not compose to zero"};
    const auto h = homology_dims(s);
    if (!h.empty()) {
        const auto [deg, dim] = *h.begin();
        std::ostringstream os;
        os << "strand homology H_" << deg << " has dimension " << dim;
        return {true, deg, os.str()};
    }
    return {};
}

VerifyReport run_resolution_check(const FreeComplex& f, const MonomialIdeal& ideal,
                                  FieldSpec field, bool parallel) {
    f.validate();
    if (f.num_vars != ideal.num_vars()) {
        VerifyReport r;
        r.ok = false;
        r.message = "ambient dimension mismatch";
        return r;
    }
    std::set<Multidegree> seed(ideal.generators().begin(), ideal.generators().end());
    for (const auto& level : f.basis) seed.insert(level.begin(), level.end());
    const std::vector<Multidegree> alphas = join_closure(std::move(seed));

    std::vector<StrandFailure> results(alphas.size());
    if (parallel) {
        const int nthreads = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (std::size_t i = 0; i < alphas.size(); ++i)
            results[i] = check_strand(f, ideal, field, alphas[i]);
    } else {
        for (std::size_t i = 0; i < alphas.size(); ++i)
            results[i] = check_strand(f, ideal, field, alphas[i]);
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!results[i].failed) continue;
        VerifyReport r;
        r.ok = false;
        r.degree = alphas[i];
        r.homological_degree = results[i].homological_degree;
        r.message = "not exact at degree " + degree_string(alphas[i]) + ": " + results[i].reason;
        return r;
    }
    return {};
}

}  // namespace

VerifyReport is_resolution_of(const FreeComplex& f, const MonomialIdeal& ideal, FieldSpec field) {
    return run_resolution_check(f, ideal, field, true);
}

VerifyReport is_resolution_of_serial(const FreeComplex& f, const MonomialIdeal& ideal, FieldSpec field) {
    return run_resolution_check(f, ideal, field, false);
}

bool is_minimal(const FreeComplex& f) {
    f.validate();
    for (std::size_t n = 0; n < f.diffs.size(); ++n)
        for (const auto& [r, c, v] : f.diffs[n])
            if (f.basis[n][static_cast<std::size_t>(r)] == f.basis[n + 1][static_cast<std::size_t>(c)])
                return false;  // unit entry
    return true;
}

namespace {

// Dense mutable view used while cancelling unit entries.
struct MutableComplex {
    std::vector<std::vector<Multidegree>> degs;
    std::vector<std::vector<char>> alive;
    // dense[n][r][c] with r over basis[n], c over basis[n+1]
    std::vector<std::vector<std::vector<Rational>>> dense;
};

}  // namespace

FreeComplex minimalize(const FreeComplex& f, FieldSpec field) {
    f.validate();
    FieldOps ops(field);

    MutableComplex m;
    m.degs = f.basis;
    m.alive.resize(f.basis.size());
    for (std::size_t n = 0; n < f.basis.size(); ++n)
        m.alive[n].assign(f.basis[n].size(), 1);
    m.dense.resize(f.diffs.size());
    for (std::size_t n = 0; n < f.diffs.size(); ++n) {
        m.dense[n].assign(f.basis[n].size(), std::vector<Rational>(f.basis[n + 1].size(), Rational(0)));
        for (const auto& [r, c, v] : f.diffs[n]) {
            auto& cell = m.dense[n][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            cell = ops.canon(ops.add(cell, v));
        }
    }

    // Cancel one unit entry of the lowest homological degree: the first
    // equal-degree nonzero, scanning columns then rows. Restart from the
    // bottom after every cancellation.
    while (true) {
        int fn = -1, fr = -1, fc = -1;
        for (std::size_t n = 0; n < m.dense.size() && fn < 0; ++n) {
            const std::size_t ncols = m.degs[n + 1].size();
            const std::size_t nrows = m.degs[n].size();
            for (std::size_t c = 0; c < ncols && fn < 0; ++c) {
                if (!m.alive[n + 1][c]) continue;
                for (std::size_t r = 0; r < nrows; ++r) {
                    if (!m.alive[n][r] || ops.is_zero(m.dense[n][r][c])) continue;
                    if (m.degs[n][r] != m.degs[n + 1][c]) continue;
                    fn = static_cast<int>(n);
                    fr = static_cast<int>(r);
                    fc = static_cast<int>(c);
                    break;
                }
            }
        }
        if (fn < 0) break;

        const std::size_t n = static_cast<std::size_t>(fn);
        const std::size_t r = static_cast<std::size_t>(fr);
        const std::size_t c = static_cast<std::size_t>(fc);
        const Rational uinv = ops.inv(m.dense[n][r][c]);

        // d'_{kl} = d_{kl} - d_{kj} u^{-1} d_{il} on the surviving block
        for (std::size_t k = 0; k < m.dense[n].size(); ++k) {
            if (k == r || !m.alive[n][k] || ops.is_zero(m.dense[n][k][c])) continue;
            const Rational factor = ops.mul(m.dense[n][k][c], uinv);
            for (std::size_t l = 0; l < m.dense[n][k].size(); ++l) {
                if (l == c || !m.alive[n + 1][l]) continue;
                m.dense[n][k][l] =
                    ops.canon(ops.sub(m.dense[n][k][l], ops.mul(factor, m.dense[n][r][l])));
            }
        }
        m.alive[n][r] = 0;
        m.alive[n + 1][c] = 0;
        // adjacent differentials lose the cancelled row/column outright
        if (n + 1 < m.dense.size())
            for (std::size_t l = 0; l < m.dense[n + 1][c].size(); ++l) m.dense[n + 1][c][l] = 0;
        if (n > 0)
            for (std::size_t k = 0; k < m.dense[n - 1].size(); ++k) m.dense[n - 1][k][r] = 0;
    }

    // compress surviving bases
    FreeComplex out;
    out.num_vars = f.num_vars;
    std::vector<std::vector<int>> newpos(m.degs.size());
    for (std::size_t n = 0; n < m.degs.size(); ++n) {
        newpos[n].assign(m.degs[n].size(), -1);
        std::vector<Multidegree> degs;
        for (std::size_t b = 0; b < m.degs[n].size(); ++b)
            if (m.alive[n][b]) {
                newpos[n][b] = static_cast<int>(degs.size());
                degs.push_back(m.degs[n][b]);
            }
        out.basis.push_back(std::move(degs));
    }
    while (!out.basis.empty() && out.basis.back().empty()) out.basis.pop_back();
    for (std::size_t n = 0; n + 1 < out.basis.size(); ++n) {
        SparseScalars entries;
        for (std::size_t r = 0; r < m.dense[n].size(); ++r) {
            if (!m.alive[n][r]) continue;
            for (std::size_t c = 0; c < m.dense[n][r].size(); ++c) {
                if (!m.alive[n + 1][c] || ops.is_zero(m.dense[n][r][c])) continue;
                entries.emplace_back(newpos[n][r], newpos[n + 1][c], ops.canon(m.dense[n][r][c]));
            }
        }
        out.diffs.push_back(std::move(entries));
    }
    out.validate();
    return out;
}

BettiTable tor_betti(const FreeComplex& f, FieldSpec field) {
    f.validate();
    std::set<Multidegree> degrees;
    for (const auto& level : f.basis) degrees.insert(level.begin(), level.end());

    BettiTable table;
    for (const auto& a : degrees) {
        // F (x) R/m in degree a: basis elements of degree exactly a, with
        // the equal-degree scalar entries
        std::vector<std::vector<int>> keep(f.basis.size());
        std::vector<std::map<int, int>> pos(f.basis.size());
        int top = -1;
        for (std::size_t n = 0; n < f.basis.size(); ++n) {
            for (std::size_t b = 0; b < f.basis[n].size(); ++b)
                if (f.basis[n][b] == a) {
                    pos[n][static_cast<int>(b)] = static_cast<int>(keep[n].size());
                    keep[n].push_back(static_cast<int>(b));
                }
            if (!keep[n].empty()) top = static_cast<int>(n);
        }
        ChainComplexK c;
        c.field = field;
        c.lowest = 0;
        for (int n = 0; n <= top; ++n) c.dims.push_back(static_cast<int>(keep[static_cast<std::size_t>(n)].size()));
        for (int n = 1; n <= top; ++n) {
            FieldMatrix d;
            d.field = field;
            d.rows = static_cast<int>(keep[static_cast<std::size_t>(n - 1)].size());
            d.cols = static_cast<int>(keep[static_cast<std::size_t>(n)].size());
            for (const auto& [r, col, v] : f.diffs[static_cast<std::size_t>(n - 1)]) {
                auto itc = pos[static_cast<std::size_t>(n)].find(col);
                auto itr = pos[static_cast<std::size_t>(n - 1)].find(r);
                if (itc == pos[static_cast<std::size_t>(n)].end() ||
                    itr == pos[static_cast<std::size_t>(n - 1)].end())
                    continue;
                d.entries.emplace_back(itr->second, itc->second, v);
            }
            c.diffs.push_back(std::move(d));
        }
        for (const auto& [deg, dim] : homology_dims(c))
            table.beta[{deg, a}] = dim;
    }
    return table;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> out;
    for (const auto& [key, v] : beta) {
        const int d = key.first;
        if (d >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(d) + 1, 0);
        out[static_cast<std::size_t>(d)] += v;
    }
    return out;
}

long long BettiTable::total_at(int d) const {
    long long s = 0;
    for (const auto& [key, v] : beta)
        if (key.first == d) s += v;
    return s;
}

void DegreeMap::validate() const {
    std::set<Multidegree> src, dst;
    for (const auto& [a, b] : pairs) {
        if (static_cast<int>(b.size()) != target_num_vars)
            throw std::invalid_argument("degree map image dimension mismatch");
        if (!src.insert(a).second) throw std::invalid_argument("degree map source not distinct");
        if (!dst.insert(b).second) throw std::invalid_argument("degree map image not distinct");
    }
    for (const auto& [a, fa] : pairs)
        for (const auto& [b, fb] : pairs)
            if (divides(a, b) != divides(fa, fb))
                throw std::invalid_argument("degree map is not an order isomorphism");
}

const Multidegree& DegreeMap::apply(const Multidegree& a) const {
    for (const auto& [src, dst] : pairs)
        if (src == a) return dst;
    throw std::invalid_argument("basis degree outside the isomorphism domain");
}

FreeComplex relabel(const FreeComplex& f, const DegreeMap& iso) {
    f.validate();
    iso.validate();
    FreeComplex out;
    out.num_vars = iso.target_num_vars;
    for (const auto& level : f.basis) {
        std::vector<Multidegree> degs;
        degs.reserve(level.size());
        for (const auto& d : level) degs.push_back(iso.apply(d));
        out.basis.push_back(std::move(degs));
    }
    out.diffs = f.diffs;
    out.validate();
    return out;
}

}  // namespace bettikit
