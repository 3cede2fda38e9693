#pragma once

#include <stdexcept>
#include <vector>

namespace bettikit {

/// Exponent vector in Z^m. Ideal data uses nonnegative entries; arbitrary
/// integers are permitted for shifts.
using Multidegree = std::vector<int>;

inline void require_same_length(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multidegree length mismatch");
}

/// Componentwise maximum; the lcm degree of the two monomials.
inline Multidegree join(const Multidegree& a, const Multidegree& b) {
    require_same_length(a, b);
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
    return out;
}

/// True iff a <= b componentwise, i.e. x^a divides x^b.
inline bool divides(const Multidegree& a, const Multidegree& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool strictly_below(const Multidegree& a, const Multidegree& b) {
    return a != b && divides(a, b);
}

inline long long total_degree(const Multidegree& a) {
    long long s = 0;
    for (int e : a) s += e;
    return s;
}

inline bool is_zero_degree(const Multidegree& a) {
    for (int e : a)
        if (e != 0) return false;
    return true;
}

/// Deterministic order used to sort degree lists: total degree, then lex.
inline bool degree_less(const Multidegree& a, const Multidegree& b) {
    long long sa = total_degree(a), sb = total_degree(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

}  // namespace bettikit
