#pragma once

#include "bettikit/multidegree.hpp"

#include <string>
#include <vector>

namespace bettikit {

/// A monomial ideal, stored by its unique minimal monomial generators.
/// Construction minimalizes (drops generators divisible by another) and
/// rejects the unit ideal: the zero exponent vector is never a generator.
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<Multidegree> generators,
                  std::vector<std::string> var_names = {});

    int num_vars() const { return num_vars_; }
    const std::vector<Multidegree>& generators() const { return generators_; }
    const std::vector<std::string>& var_names() const { return var_names_; }

    bool operator==(const MonomialIdeal& o) const {
        return num_vars_ == o.num_vars_ && generators_ == o.generators_;
    }

private:
    int num_vars_ = 0;
    std::vector<Multidegree> generators_;  // sorted by degree_less, pairwise incomparable
    std::vector<std::string> var_names_;
};

/// True iff a lies in deg(I), i.e. some minimal generator divides a.
bool in_degree_support(const MonomialIdeal& ideal, const Multidegree& a);

/// Parses either the ideal JSON format or the monomial-string format.
///
/// Monomial-string form: an optional "variables: a, b, c" declaration
/// followed by comma-separated monomials ("generators:" prefix optional).
/// `*` and `^` are accepted, and juxtaposition of single-letter variables
/// ("ac" for a*c). Without a declaration each distinct letter is a variable.
MonomialIdeal parse_ideal(const std::string& text);

/// Renders a as a monomial over the given variable names ("1" for zero).
std::string monomial_string(const Multidegree& a, const std::vector<std::string>& names);

/// Default names x1..xm used when no declaration is available.
std::vector<std::string> default_var_names(int m);

}  // namespace bettikit
