#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bettikit/poset.hpp"
#include "bettikit/simplicial.hpp"

#include "oracle.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace bettikit;

namespace {

std::set<std::string> id_set(const Poset& p) {
    return {p.ids().begin(), p.ids().end()};
}

Poset chain(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) {
        ids.push_back("c" + std::to_string(i));
        if (i) rel.emplace_back(i - 1, i);
    }
    return Poset::from_relations(ids, rel);
}

Poset antichain(int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
    return Poset::from_relations(ids, {});
}

}  // namespace

TEST_CASE("poset construction and axioms") {
    auto p = Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));  // transitive closure applied
    CHECK(p.covering_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_relations({"a"}, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("lcm lattice of the running examples") {
    auto LI = lcm_lattice(testutil::ideal_I());
    CHECK(LI.size() == 11);
    CHECK(id_set(LI.poset()) == std::set<std::string>{"ac", "ae", "bd", "de", "ace", "abcd", "ade",
                                                      "acde", "abde", "bde", "abcde"});

    auto LJ = lcm_lattice(testutil::ideal_J());
    CHECK(LJ.size() == 9);
    CHECK(id_set(LJ.poset()) ==
          std::set<std::string>{"wx", "xy", "wz", "yz", "wxy", "wxz", "xyz", "wyz", "wxyz"});

    auto Lx = lcm_lattice(parse_ideal("x"));
    CHECK(Lx.size() == 1);
    CHECK(Lx.grade(0) == Multidegree{1});
}

TEST_CASE("filters") {
    auto LJ = lcm_lattice(testutil::ideal_J());
    const int top = LJ.poset().index_of("wxyz");
    REQUIRE(top >= 0);
    auto below = open_filter(LJ, top);
    CHECK(below.size() == 8);

    auto LI = lcm_lattice(testutil::ideal_I());
    const int ac = LI.poset().index_of("ac");
    CHECK(open_filter(LI, ac).size() == 0);  // minimal element
    for (int i = 0; i < LI.size(); ++i) {
        auto cf = closed_filter(LI, i);
        CHECK(cf.poset().index_of(LI.poset().id(i)) >= 0);
    }
    CHECK_THROWS_AS(open_filter(LI, 99), std::invalid_argument);
}

TEST_CASE("order complex basics") {
    auto two = order_complex(antichain(2));
    CHECK(two.faces.size() == 1);
    CHECK(two.faces[0].size() == 2);

    auto full = order_complex(chain(3));
    REQUIRE(full.faces.size() == 3);
    CHECK(full.faces[0].size() == 3);
    CHECK(full.faces[1].size() == 3);
    CHECK(full.faces[2].size() == 1);
    full.validate();
}

TEST_CASE("order complex of the open filter below wxyz") {
    auto LJ = lcm_lattice(testutil::ideal_J());
    auto below = open_filter(LJ, LJ.poset().index_of("wxyz"));
    auto k = order_complex(below.poset());
    REQUIRE(k.faces.size() == 2);
    CHECK(k.faces[0].size() == 8);
    CHECK(k.faces[1].size() == 8);  // one 8-cycle: the subdivided 4-cycle

    // oracle agreement: the DFS enumeration must equal the subset scan
    auto brute = oracle::brute_chains(below.poset());
    CHECK(static_cast<long long>(brute.size()) == k.face_count());
}

TEST_CASE("order complex matches the brute-force chain scan on random lattices") {
    std::mt19937 rng(101);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 25; ++trial) {
        auto maybe = testutil::random_ideal(rng, 4, 4, 2);
        if (!maybe) continue;
        auto lattice = lcm_lattice(*maybe);
        if (lattice.size() > 16) continue;
        ++done;
        auto k = order_complex(lattice.poset());
        k.validate();
        auto brute = oracle::brute_chains(lattice.poset());
        std::set<std::vector<int>> expected;
        // brute chains are listed in extension order, as are the faces;
        // map ids through the vertex table to compare
        std::vector<int> vertex_of(static_cast<std::size_t>(lattice.size()));
        for (int v = 0; v < lattice.size(); ++v) {
            auto it = std::find(k.vertices.begin(), k.vertices.end(), lattice.poset().id(v));
            REQUIRE(it != k.vertices.end());
            vertex_of[static_cast<std::size_t>(v)] = static_cast<int>(it - k.vertices.begin());
        }
        for (auto c : brute) {
            for (auto& x : c) x = vertex_of[static_cast<std::size_t>(x)];
            expected.insert(c);
        }
        std::set<std::vector<int>> got;
        for (const auto& level : k.faces) got.insert(level.begin(), level.end());
        CHECK(got == expected);
    }
    CHECK(done >= 10);
}

TEST_CASE("closed filters give cones with the filter apex") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto maybe = testutil::random_ideal(rng, 4, 4, 2);
        if (!maybe) continue;
        auto lattice = lcm_lattice(*maybe);
        for (int a = 0; a < lattice.size(); ++a) {
            auto cf = closed_filter(lattice, a);
            auto k = order_complex(cf.poset());
            const std::string apex = lattice.poset().id(a);
            // every maximal face contains the apex
            std::set<std::vector<int>> all;
            for (const auto& level : k.faces) all.insert(level.begin(), level.end());
            for (const auto& f : all) {
                bool maximal = true;
                for (const auto& g : all) {
                    if (g.size() != f.size() + 1) continue;
                    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) { maximal = false; break; }
                }
                if (!maximal) continue;
                bool has_apex = false;
                for (int v : f)
                    if (k.vertices[static_cast<std::size_t>(v)] == apex) has_apex = true;
                CHECK(has_apex);
            }
        }
    }
}

TEST_CASE("atoms and atomicity") {
    auto LI = lcm_lattice(testutil::ideal_I());
    auto atoms = LI.poset().minimal_elements();
    std::set<std::string> atom_ids;
    for (int a : atoms) atom_ids.insert(LI.poset().id(a));
    CHECK(atom_ids == std::set<std::string>{"ac", "ae", "bd", "de"});
    const int top = LI.poset().index_of("abcde");
    CHECK(atoms_below(LI.poset(), top).size() == 4);
    CHECK(is_atomic(LI.poset()));

    // two incomparable elements with two incomparable upper bounds: no
    // least upper bound, hence not atomic
    auto bad = Poset::from_relations({"a", "b", "u", "v"}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK_FALSE(is_atomic(bad));
}

TEST_CASE("random lcm lattices are atomic") {
    std::mt19937 rng(13);
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto maybe = testutil::random_ideal(rng);
        if (!maybe) continue;
        ++done;
        CHECK(is_atomic(lcm_lattice(*maybe).poset()));
    }
    CHECK(done >= 20);
}

TEST_CASE("meet closure examples") {
    // three atoms plus top: no new intersections
    auto diamond = Poset::from_relations({"1", "2", "3", "t"}, {{0, 3}, {1, 3}, {2, 3}});
    auto mc = meet_closure(diamond);
    CHECK(mc.lattice.size() == 5);
    CHECK(mc.bottom != -1);
    CHECK(mc.lattice.poset().id(mc.bottom) == "{}");
    CHECK(mc.lattice.poset().id(mc.top) == "{1,2,3}");

    // atoms 1..4 with 123, 124, 1234: closure adds {1,2}
    auto p = Poset::from_relations(
        {"1", "2", "3", "4", "123", "124", "1234"},
        {{0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}, {3, 5}, {4, 6}, {5, 6}});
    auto mc2 = meet_closure(p);
    CHECK(mc2.lattice.size() == 9);  // 7 images + {1,2} + {}
    CHECK(mc2.lattice.poset().index_of("{1,2}") >= 0);

    auto bad = Poset::from_relations({"a", "b", "u", "v"}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK_THROWS_AS(meet_closure(bad), std::invalid_argument);
}

TEST_CASE("meet closure is intersection-closed and join-recovers elements") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        auto maybe = testutil::random_ideal(rng, 4, 4, 2);
        if (!maybe) continue;
        auto lattice = lcm_lattice(*maybe);
        auto mc = meet_closure(lattice.poset());
        for (std::size_t i = 0; i < mc.masks.size(); ++i)
            for (std::size_t j = 0; j < mc.masks.size(); ++j) {
                auto meet = mc.masks[i] & mc.masks[j];
                CHECK(std::find(mc.masks.begin(), mc.masks.end(), meet) != mc.masks.end());
            }
        // every element is the union of the atom singletons below it
        for (std::size_t i = 0; i < mc.masks.size(); ++i) {
            std::uint64_t u = 0;
            for (std::size_t k = 0; k < mc.sigma.atoms.size(); ++k)
                if (mc.masks[i] >> k & 1) u |= std::uint64_t{1} << k;
            CHECK(u == mc.masks[i]);
        }
    }
}

TEST_CASE("sigma preserves existing meets") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        auto maybe = testutil::random_ideal(rng, 4, 4, 2);
        if (!maybe) continue;
        auto lattice = lcm_lattice(*maybe);
        const auto& p = lattice.poset();
        auto mc = meet_closure(p);
        auto mask_of = [&](int x) {
            std::uint64_t m = 0;
            for (int k : mc.sigma.sets[static_cast<std::size_t>(x)]) m |= std::uint64_t{1} << k;
            return m;
        };
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                // greatest lower bound of x, y in P if it exists
                int glb = -1;
                for (int z = 0; z < p.size(); ++z) {
                    if (!p.leq(z, x) || !p.leq(z, y)) continue;
                    bool greatest = true;
                    for (int w = 0; w < p.size(); ++w)
                        if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) { greatest = false; break; }
                    if (greatest) { glb = z; break; }
                }
                if (glb >= 0) CHECK(mask_of(glb) == (mask_of(x) & mask_of(y)));
            }
    }
}

TEST_CASE("meet closure of an lcm lattice recovers the lattice with bottom") {
    std::mt19937 rng(29);
    int done = 0;
    for (int trial = 0; trial < 30 && done < 15; ++trial) {
        auto maybe = testutil::random_ideal(rng, 4, 4, 2);
        if (!maybe) continue;
        ++done;
        auto lattice = lcm_lattice(*maybe);
        auto mc = meet_closure(lattice.poset());
        // L plus a formal bottom
        std::vector<std::string> ids = lattice.poset().ids();
        ids.push_back("0hat");
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < lattice.size(); ++i)
            for (int j = 0; j < lattice.size(); ++j)
                if (lattice.poset().lt(i, j)) rel.emplace_back(i, j);
        for (int i = 0; i < lattice.size(); ++i) rel.emplace_back(lattice.size(), i);
        auto with_bottom = Poset::from_relations(ids, rel);
        CHECK(find_isomorphism(mc.lattice.poset(), with_bottom).has_value());
    }
    CHECK(done >= 10);
}

TEST_CASE("isomorphism on the running examples") {
    auto LI = lcm_lattice(testutil::ideal_I());
    auto LJ = lcm_lattice(testutil::ideal_J());
    CHECK_FALSE(find_isomorphism(LI.poset(), LJ.poset()).has_value());

    // B(I) is L(I)\0 minus acde, abde; B(J) is all of L(J)\0
    std::vector<int> keep;
    for (int i = 0; i < LI.size(); ++i) {
        const auto& id = LI.poset().id(i);
        if (id != "acde" && id != "abde") keep.push_back(i);
    }
    auto BI = LI.poset().induced(keep);
    auto iso = find_isomorphism(BI, LJ.poset());
    REQUIRE(iso.has_value());
    for (int i = 0; i < BI.size(); ++i)
        for (int j = 0; j < BI.size(); ++j)
            CHECK(BI.leq(i, j) == LJ.poset().leq((*iso)[static_cast<std::size_t>(i)],
                                                 (*iso)[static_cast<std::size_t>(j)]));

    // self-isomorphism is found and is the identity
    auto self = find_isomorphism(LI.poset(), LI.poset());
    REQUIRE(self.has_value());
    for (int i = 0; i < LI.size(); ++i) CHECK((*self)[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("isomorphism invariants on random pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto ma = testutil::random_ideal(rng, 4, 4, 2);
        auto mb = testutil::random_ideal(rng, 4, 4, 2);
        if (!ma || !mb) continue;
        auto a = lcm_lattice(*ma).poset();
        auto b = lcm_lattice(*mb).poset();
        auto iso = find_isomorphism(a, b);
        if (iso) {
            CHECK(a.size() == b.size());
            CHECK(a.covering_pairs().size() == b.covering_pairs().size());
        }
        // a shuffled copy is always isomorphic
        std::vector<int> perm(static_cast<std::size_t>(a.size()));
        for (int i = 0; i < a.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> ids(static_cast<std::size_t>(a.size()));
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < a.size(); ++i) ids[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = a.id(i) + "'";
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j)
                if (a.lt(i, j))
                    rel.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        CHECK(find_isomorphism(a, Poset::from_relations(ids, rel)).has_value());
    }
}

TEST_CASE("covering relations of L(I) minus bottom") {
    auto LI = lcm_lattice(testutil::ideal_I());
    CHECK(oracle::brute_covering_count(LI.poset()) == 15);
    CHECK(LI.poset().covering_pairs().size() == 15);
}

TEST_CASE("hasse dot output") {
    auto c = hasse_dot(chain(3));
    CHECK(c.find("n0 -> n1") != std::string::npos);
    CHECK(c.find("n1 -> n2") != std::string::npos);
    CHECK(c.find("dashed") == std::string::npos);

    auto a = hasse_dot(antichain(2));
    CHECK(a.find("->") == std::string::npos);

    auto LI = lcm_lattice(testutil::ideal_I());
    auto dot = hasse_dot(LI.poset(), {"acde", "abde"});
    CHECK(std::count(dot.begin(), dot.end(), '>') == 15);
    CHECK(dot.find("rounded,dashed") != std::string::npos);
}

TEST_CASE("linear extension is a topological order") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto maybe = testutil::random_ideal(rng, 5, 4, 2);
        if (!maybe) continue;
        auto p = lcm_lattice(*maybe).poset();
        auto ext = p.linear_extension();
        std::vector<int> place(static_cast<std::size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) place[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j)
                if (p.lt(i, j))
                    CHECK(place[static_cast<std::size_t>(i)] < place[static_cast<std::size_t>(j)]);
    }
}
