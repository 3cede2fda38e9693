// Test-only brute-force oracle, kept independent of the library's own
// chain enumeration and elimination code: chains come from a subset scan
// and ranks from plain normalized Gaussian elimination.
#pragma once

#include "bettikit/poset.hpp"
#include "bettikit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using bettikit::Poset;
using bettikit::Rational;

/// Every nonempty chain, as a sorted list of element indices (subset scan;
/// requires |P| <= 24).
inline std::vector<std::vector<int>> brute_chains(const Poset& p) {
    const int n = p.size();
    if (n > 24) throw std::invalid_argument("brute_chains is for small posets only");
    const auto ext = p.linear_extension();
    std::vector<int> place(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) place[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;

    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(i);
        bool chain = true;
        for (std::size_t a = 0; a < sub.size() && chain; ++a)
            for (std::size_t b = a + 1; b < sub.size() && chain; ++b)
                if (!p.leq(sub[a], sub[b]) && !p.leq(sub[b], sub[a])) chain = false;
        if (!chain) continue;
        // order by the linear extension so faces are comparable with the
        // library's orientation
        std::sort(sub.begin(), sub.end(),
                  [&](int a, int b) { return place[static_cast<std::size_t>(a)] < place[static_cast<std::size_t>(b)]; });
        out.push_back(std::move(sub));
    }
    return out;
}

inline int brute_covering_count(const Poset& p) {
    int count = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (!p.lt(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < p.size(); ++k)
                if (p.lt(i, k) && p.lt(k, j)) { cover = false; break; }
            if (cover) ++count;
        }
    return count;
}

/// Plain Gaussian elimination with a normalized pivot row; p == 0 means Q.
inline int brute_rank(std::vector<std::vector<Rational>> m, long long p) {
    auto norm = [&](const Rational& x) {
        if (p == 0) return x;
        using bettikit::Integer;
        Integer num = boost::multiprecision::numerator(x) % p;
        Integer den = boost::multiprecision::denominator(x) % p;
        long long n = static_cast<long long>(num), d = static_cast<long long>(den);
        if (n < 0) n += p;
        if (d < 0) d += p;
        long long dinv = 1;
        for (long long e = p - 2, b = d; e > 0; e >>= 1) {  // Fermat inverse
            if (e & 1) dinv = dinv * b % p;
            b = b * b % p;
        }
        return Rational(n * dinv % p);
    };
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row) x = norm(x);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = norm(Rational(1) / m[r][c]);  // norm() handles the modular inverse
        for (auto& x : m[r]) x = norm(x * inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = norm(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Reduced homology of the order complex of P by brute force: chains from
/// the subset scan, boundaries from the definition, ranks from brute_rank.
inline std::map<int, int> brute_reduced_homology(const Poset& p, long long field_p) {
    const auto chains = brute_chains(p);
    std::map<int, std::vector<std::vector<int>>> faces;
    for (const auto& c : chains) faces[static_cast<int>(c.size()) - 1].push_back(c);
    if (faces.empty()) return {{-1, 1}};
    const int top = faces.rbegin()->first;

    std::map<int, int> dims;
    dims[-1] = 1;
    for (int n = 0; n <= top; ++n) dims[n] = static_cast<int>(faces[n].size());

    std::map<int, int> ranks;
    ranks[0] = dims[0] > 0 ? 1 : 0;  // augmentation row of ones
    for (int n = 1; n <= top; ++n) {
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < faces[n - 1].size(); ++i) index[faces[n - 1][i]] = static_cast<int>(i);
        std::vector<std::vector<Rational>> mat(faces[n - 1].size(),
                                               std::vector<Rational>(faces[n].size(), Rational(0)));
        for (std::size_t j = 0; j < faces[n].size(); ++j) {
            const auto& f = faces[n][j];
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> facet;
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != i) facet.push_back(f[t]);
                mat[static_cast<std::size_t>(index.at(facet))][j] = Rational(i % 2 == 0 ? 1 : -1);
            }
        }
        ranks[n] = brute_rank(std::move(mat), field_p);
    }
    std::map<int, int> out;
    for (int n = -1; n <= top; ++n) {
        int h = dims.count(n) ? dims[n] : 0;
        if (ranks.count(n)) h -= ranks[n];
        if (ranks.count(n + 1)) h -= ranks[n + 1];
        if (h != 0) out[n] = h;
    }
    return out;
}

}  // namespace oracle
