#include "bettikit/betti.hpp"

#include "bettikit/linalg.hpp"
#include "bettikit/parallel.hpp"
#include "bettikit/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bettikit {

namespace {

// beta_{d,.} contributions at one element: reduced homology of the order
// complex of the open filter, shifted up by one.
std::map<int, long long> interval_betti(const GradedPoset& p, int elem, FieldSpec field) {
    const GradedPoset below = open_filter(p, elem);
    std::map<int, long long> out;
    for (const auto& [deg, dim] : reduced_homology_dims(order_complex(below.poset()), field))
        out[deg + 1] = dim;
    return out;
}

BettiTable interval_sweep(const GradedPoset& p, FieldSpec field, bool parallel) {
    std::vector<std::map<int, long long>> per_elem(static_cast<std::size_t>(p.size()));
    if (parallel) {
        const int nthreads = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int i = 0; i < p.size(); ++i)
            per_elem[static_cast<std::size_t>(i)] = interval_betti(p, i, field);
    } else {
        for (int i = 0; i < p.size(); ++i)
            per_elem[static_cast<std::size_t>(i)] = interval_betti(p, i, field);
    }
    BettiTable table;
    for (int i = 0; i < p.size(); ++i)
        for (const auto& [d, v] : per_elem[static_cast<std::size_t>(i)])
            table.beta[{d, p.grade(i)}] = v;
    return table;
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, FieldSpec field) {
    return interval_sweep(lcm_lattice(ideal), field, true);
}

BettiTable betti_numbers_serial(const MonomialIdeal& ideal, FieldSpec field) {
    return interval_sweep(lcm_lattice(ideal), field, false);
}

BettiTable betti_numbers_on(const GradedPoset& p, const MonomialIdeal& ideal, FieldSpec field) {
    if (p.num_vars() != ideal.num_vars())
        throw std::invalid_argument("poset is not graded into the ideal's Z^m");
    for (int i = 0; i < p.size(); ++i)
        if (!in_degree_support(ideal, p.grade(i)))
            throw std::invalid_argument("poset element '" + p.poset().id(i) + "' lies outside deg(I)");
    // B(I,k) <= P is required for correctness but cannot be validated here
    // without computing B itself.
    return interval_sweep(p, field, true);
}

BettiPosetResult betti_poset(const MonomialIdeal& ideal, FieldSpec field) {
    const GradedPoset lattice = lcm_lattice(ideal);
    const BettiTable table = interval_sweep(lattice, field, true);

    std::vector<int> keep;
    std::set<Multidegree> present;
    for (const auto& [key, v] : table.beta) present.insert(key.second);
    for (int i = 0; i < lattice.size(); ++i)
        if (present.count(lattice.grade(i))) keep.push_back(i);

    BettiPosetResult out{lattice.induced(keep), field, table};

    // minimal elements of B are exactly the generator degrees
    std::set<Multidegree> mins;
    for (int i : out.poset.poset().minimal_elements()) mins.insert(out.poset.grade(i));
    std::set<Multidegree> gens(ideal.generators().begin(), ideal.generators().end());
    if (mins != gens)
        throw std::logic_error("betti poset minimal elements differ from the generator degrees");
    return out;
}

MeetClosure betti_lattice(const MonomialIdeal& ideal, FieldSpec field) {
    return meet_closure(betti_poset(ideal, field).poset.poset());
}

CheckBettiResult check_betti_poset(const Poset& p, FieldSpec field) {
    if (!is_atomic(p)) throw std::invalid_argument("check_betti_poset requires an atomic poset");
    const MeetClosure mc = meet_closure(p);
    const Poset& m = mc.lattice.poset();

    std::vector<char> in_p(static_cast<std::size_t>(m.size()), 0);
    for (int x : mc.embedding) in_p[static_cast<std::size_t>(x)] = 1;

    CheckBettiResult out;
    for (int x = 0; x < m.size(); ++x) {
        if (x == mc.bottom) continue;
        // Delta(M(P)_{<x} \ 0)
        std::vector<int> keep;
        for (int y = 0; y < m.size(); ++y)
            if (y != mc.bottom && m.lt(y, x)) keep.push_back(y);
        const bool vanishes = reduced_homology_dims(order_complex(m.induced(keep)), field).empty();
        const bool missing = !in_p[static_cast<std::size_t>(x)];
        if (missing != vanishes) {
            BettiWitness w;
            w.in_poset = !missing;
            for (std::size_t k = 0; k < mc.sigma.atoms.size(); ++k)
                if (mc.masks[static_cast<std::size_t>(x)] >> k & 1)
                    w.atoms.push_back(mc.sigma.atoms[k]);
            out.witnesses.push_back(std::move(w));
        }
    }
    out.verdict = out.witnesses.empty();
    if (out.verdict) out.realizing_ideal = realize_atomic_lattice(m);
    return out;
}

MonomialIdeal realize_atomic_lattice(const Poset& lattice) {
    const auto mins = lattice.minimal_elements();
    if (mins.size() != 1) throw std::invalid_argument("lattice needs a unique bottom");
    const int bottom = mins[0];
    const int n = lattice.size();
    if (n < 2) throw std::invalid_argument("lattice needs at least one atom");

    // bounded-lattice check: unique greatest lower / least upper bound per pair
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (bool meets : {true, false}) {
                std::vector<int> bounds;
                for (int z = 0; z < n; ++z)
                    if (meets ? (lattice.leq(z, x) && lattice.leq(z, y))
                              : (lattice.leq(x, z) && lattice.leq(y, z)))
                        bounds.push_back(z);
                int best = -1;
                for (int z : bounds) {
                    bool extreme = true;
                    for (int w : bounds)
                        if (meets ? !lattice.leq(w, z) : !lattice.leq(z, w)) { extreme = false; break; }
                    if (extreme) { best = z; break; }
                }
                if (best < 0) throw std::invalid_argument("not a lattice: a pair lacks a meet or join");
            }
        }

    std::vector<int> elems;  // L \ 0, one variable each
    for (int i = 0; i < n; ++i)
        if (i != bottom) elems.push_back(i);
    const Poset nonzero = lattice.induced(elems);
    if (!is_atomic(nonzero)) throw std::invalid_argument("not an atomic lattice");
    const auto atoms = nonzero.minimal_elements();

    if (atoms.size() == 1)
        // the two-element chain realizes as a principal ideal; the product
        // construction below degenerates to the unit monomial here
        return MonomialIdeal(1, {{1}});

    std::vector<std::string> names;
    names.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<Multidegree> gens;
    for (int a : atoms) {
        Multidegree g(elems.size(), 0);
        for (std::size_t pidx = 0; pidx < elems.size(); ++pidx)
            if (!nonzero.leq(a, static_cast<int>(pidx))) g[pidx] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(static_cast<int>(elems.size()), std::move(gens), std::move(names));
}

HomologyIsoReport verify_homology_iso(const MonomialIdeal& ideal, FieldSpec field) {
    const GradedPoset lattice = lcm_lattice(ideal);
    const BettiPosetResult b = betti_poset(ideal, field);

    std::map<Multidegree, int> lattice_index;
    for (int i = 0; i < lattice.size(); ++i) lattice_index[lattice.grade(i)] = i;

    const int nb = b.poset.size();
    std::vector<char> equal(static_cast<std::size_t>(nb), 0);
    const int nthreads = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int i = 0; i < nb; ++i) {
        const auto hb = reduced_homology_dims(order_complex(open_filter(b.poset, i).poset()), field);
        const int li = lattice_index.at(b.poset.grade(i));
        const auto hl = reduced_homology_dims(order_complex(open_filter(lattice, li).poset()), field);
        equal[static_cast<std::size_t>(i)] = hb == hl ? 1 : 0;
    }
    for (int i = 0; i < nb; ++i) {
        if (equal[static_cast<std::size_t>(i)]) continue;
        HomologyIsoReport r;
        r.ok = false;
        r.degree = b.poset.grade(i);
        std::ostringstream os;
        os << "interval homology differs at '" << b.poset.poset().id(i) << "'";
        r.message = os.str();
        return r;
    }
    return {};
}

}  // namespace bettikit
