#include "bettikit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace bettikit {

void FieldMatrix::validate() const {
    for (const auto& [r, c, v] : entries) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("matrix entry out of range");
        if (v == 0) throw std::invalid_argument("stored zero scalar");
    }
}

namespace {

constexpr int kDenseColumnLimit = 512;

// Fraction-free (Bareiss) elimination on the denominator-cleared integer
// matrix; every intermediate entry is a minor of the original, so the
// divisions below are exact and entry growth stays polynomial.
int rank_rationals_dense(const FieldMatrix& m) {
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m.rows),
                                        std::vector<Integer>(static_cast<std::size_t>(m.cols), 0));
    std::vector<Integer> denom(static_cast<std::size_t>(m.rows), 1);
    for (const auto& [r, c, v] : m.entries)
        denom[static_cast<std::size_t>(r)] =
            boost::multiprecision::lcm(denom[static_cast<std::size_t>(r)],
                                       Integer(boost::multiprecision::denominator(v)));
    for (const auto& [r, c, v] : m.entries) {
        Rational scaled = v * Rational(denom[static_cast<std::size_t>(r)]);
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            Integer(boost::multiprecision::numerator(scaled));
    }

    Integer prev = 1;
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int pivot = -1;
        for (int i = pr; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(pivot)]);
        const auto& prow = a[static_cast<std::size_t>(pr)];
        for (int i = pr + 1; i < m.rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(pc)] == 0 && prev == 1) continue;
            for (int j = pc + 1; j < m.cols; ++j) {
                Integer t = prow[static_cast<std::size_t>(pc)] * row[static_cast<std::size_t>(j)] -
                            row[static_cast<std::size_t>(pc)] * prow[static_cast<std::size_t>(j)];
                assert(t % prev == 0);
                row[static_cast<std::size_t>(j)] = t / prev;
            }
            row[static_cast<std::size_t>(pc)] = 0;
        }
        prev = prow[static_cast<std::size_t>(pc)];
        ++pr;
    }
    return pr;
}

int rank_gf_dense(const FieldMatrix& m) {
    const std::int64_t p = m.field.characteristic();
    FieldOps ops(m.field);
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(m.rows),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(m.cols), 0));
    for (const auto& [r, c, v] : m.entries) {
        auto& cell = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        cell = (cell + ops.residue(v)) % p;
    }
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int pivot = -1;
        for (int i = pr; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(pivot)]);
        const std::int64_t inv = mod_inverse(a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)], p);
        for (int i = pr + 1; i < m.rows; ++i) {
            const std::int64_t f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
            if (f == 0) continue;
            const std::int64_t mult = f * inv % p;
            for (int j = pc; j < m.cols; ++j) {
                auto& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cell = (cell - mult * a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)]) % p;
                if (cell < 0) cell += p;
            }
        }
        ++pr;
    }
    return pr;
}

// Sparse elimination for wide matrices: rows kept as sorted (col, value)
// lists, pivoting on the sparsest row per column.
int rank_sparse(const FieldMatrix& m) {
    FieldOps ops(m.field);
    std::vector<std::map<int, Rational>> build(static_cast<std::size_t>(m.rows));
    for (const auto& [r, c, v] : m.entries) {
        auto& row = build[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        Rational sum = ops.add(it == row.end() ? Rational(0) : it->second, v);
        if (ops.is_zero(sum)) row.erase(c);
        else row[c] = ops.canon(sum);
    }
    std::vector<std::map<int, Rational>> rows;
    for (auto& r : build)
        if (!r.empty()) rows.push_back(std::move(r));

    int rank = 0;
    for (int col = 0; col < m.cols && !rows.empty(); ++col) {
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].begin()->first != col) continue;
            if (pivot < 0 || rows[i].size() < rows[static_cast<std::size_t>(pivot)].size())
                pivot = static_cast<int>(i);
        }
        if (pivot < 0) continue;
        std::map<int, Rational> prow = std::move(rows[static_cast<std::size_t>(pivot)]);
        rows.erase(rows.begin() + pivot);
        ++rank;
        const Rational pinv = ops.inv(prow.begin()->second);
        std::vector<std::map<int, Rational>> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            if (row.begin()->first == col) {
                const Rational mult = ops.mul(row.begin()->second, pinv);
                for (const auto& [c, v] : prow) {
                    auto it = row.find(c);
                    Rational val = ops.sub(it == row.end() ? Rational(0) : it->second, ops.mul(mult, v));
                    if (ops.is_zero(val)) { if (it != row.end()) row.erase(it); }
                    else row[c] = ops.canon(val);
                }
            }
            if (!row.empty()) next.push_back(std::move(row));
        }
        rows = std::move(next);
    }
    return rank;
}

}  // namespace

int rank(const FieldMatrix& m) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    if (m.cols >= kDenseColumnLimit || m.rows >= kDenseColumnLimit) return rank_sparse(m);
    return m.field.is_rationals() ? rank_rationals_dense(m) : rank_gf_dense(m);
}

int ChainComplexK::dim_at(int n) const {
    const int i = n - lowest;
    if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(i)];
}

void ChainComplexK::validate() const {
    if (dims.empty() ? !diffs.empty() : diffs.size() + 1 != dims.size())
        throw std::invalid_argument("chain complex needs one differential per consecutive pair");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].rows != dims[i] || diffs[i].cols != dims[i + 1])
            throw std::invalid_argument("differential shape mismatch");
        diffs[i].validate();
    }
}

bool ChainComplexK::is_complex() const {
    FieldOps ops(field);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
        // (diffs[i] * diffs[i+1]) must vanish in the field
        std::map<std::pair<int, int>, Rational> lower;
        for (const auto& [r, c, v] : diffs[i].entries) {
            auto& cell = lower[{r, c}];
            cell = ops.add(cell, v);
        }
        std::map<std::pair<int, int>, Rational> prod;
        for (const auto& [r, c, v] : diffs[i + 1].entries)
            for (const auto& [rc, lv] : lower) {
                if (rc.second != r) continue;
                auto& cell = prod[{rc.first, c}];
                cell = ops.add(cell, ops.mul(lv, v));
            }
        for (const auto& [_, v] : prod)
            if (!ops.is_zero(v)) return false;
    }
    return true;
}

ChainComplexK boundary_matrices(const SimplicialComplex& k, FieldSpec field, bool reduced) {
    ChainComplexK c;
    c.field = field;
    const int top = k.dim();
    if (top < 0) {
        if (reduced) {
            c.lowest = -1;
            c.dims = {1};
        }
        return c;
    }
    c.lowest = reduced ? -1 : 0;
    if (reduced) c.dims.push_back(1);
    for (int n = 0; n <= top; ++n)
        c.dims.push_back(static_cast<int>(k.faces[static_cast<std::size_t>(n)].size()));

    if (reduced) {
        FieldMatrix aug;
        aug.field = field;
        aug.rows = 1;
        aug.cols = static_cast<int>(k.faces[0].size());
        for (int j = 0; j < aug.cols; ++j) aug.entries.emplace_back(0, j, Rational(1));
        c.diffs.push_back(std::move(aug));
    }
    for (int n = 1; n <= top; ++n) {
        const auto& lower = k.faces[static_cast<std::size_t>(n - 1)];
        const auto& upper = k.faces[static_cast<std::size_t>(n)];
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
        FieldMatrix d;
        d.field = field;
        d.rows = static_cast<int>(lower.size());
        d.cols = static_cast<int>(upper.size());
        for (std::size_t j = 0; j < upper.size(); ++j) {
            const auto& f = upper[j];
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> facet;
                facet.reserve(f.size() - 1);
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != i) facet.push_back(f[t]);
                auto it = index.find(facet);
                if (it == index.end()) throw std::invalid_argument("complex not closed under subsets");
                d.entries.emplace_back(it->second, static_cast<int>(j), Rational(i % 2 == 0 ? 1 : -1));
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

std::map<int, int> homology_dims(const ChainComplexK& c) {
    c.validate();
    if (!c.is_complex()) throw std::invalid_argument("differentials do not compose to zero");
    std::map<int, int> out;
    std::vector<int> ranks(c.diffs.size());
    for (std::size_t i = 0; i < c.diffs.size(); ++i) ranks[i] = rank(c.diffs[i]);
    for (std::size_t i = 0; i < c.dims.size(); ++i) {
        int h = c.dims[i];
        if (i > 0) h -= ranks[i - 1];          // map out of degree lowest+i
        if (i < ranks.size()) h -= ranks[i];   // image coming from degree lowest+i+1
        if (h != 0) out[c.lowest + static_cast<int>(i)] = h;
    }
    return out;
}

std::map<int, int> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field) {
    return homology_dims(boundary_matrices(k, field, true));
}

}  // namespace bettikit
