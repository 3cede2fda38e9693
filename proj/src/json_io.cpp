#include "bettikit/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("scalar must be an integer or a string like \"3/4\"");
}

}  // namespace

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["variables"] = ideal.var_names();
    j["generators"] = ideal.generators();
    return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
    return parse_ideal(j.dump());
}

MonomialIdeal ideal_from_text(const std::string& text) {
    return parse_ideal(text);
}

Json poset_to_json(const Poset& p) {
    Json j;
    j["elements"] = p.ids();
    Json rel = Json::array();
    for (auto [i, k] : p.covering_pairs()) rel.push_back(Json::array({i, k}));
    j["relations"] = rel;
    return j;
}

Json poset_to_json(const GradedPoset& p) {
    Json j = poset_to_json(p.poset());
    Json grading = Json::object();
    for (int i = 0; i < p.size(); ++i) grading[p.poset().id(i)] = p.grade(i);
    j["grading"] = grading;
    return j;
}

bool json_has_grading(const Json& j) { return j.contains("grading"); }

Poset poset_from_json(const Json& j) {
    if (!j.contains("elements")) bad("poset JSON needs 'elements'");
    std::vector<std::string> ids = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("relations")) {
        for (const auto& rel : j.at("relations")) {
            if (!rel.is_array() || rel.size() != 2) bad("each relation must be a pair");
            int a, b;
            if (rel[0].is_string()) {
                auto find = [&](const std::string& id) {
                    auto it = std::find(ids.begin(), ids.end(), id);
                    if (it == ids.end()) bad("relation mentions unknown element '" + id + "'");
                    return static_cast<int>(it - ids.begin());
                };
                a = find(rel[0].get<std::string>());
                b = find(rel[1].get<std::string>());
            } else {
                a = rel[0].get<int>();
                b = rel[1].get<int>();
            }
            pairs.emplace_back(a, b);
        }
    }
    return Poset::from_relations(std::move(ids), pairs);
}

GradedPoset graded_poset_from_json(const Json& j) {
    Poset p = poset_from_json(j);
    if (!j.contains("grading")) bad("poset JSON needs a 'grading' for this operation");
    const Json& grading = j.at("grading");
    std::vector<Multidegree> grades;
    int num_vars = -1;
    for (int i = 0; i < p.size(); ++i) {
        if (!grading.contains(p.id(i))) bad("grading is missing element '" + p.id(i) + "'");
        Multidegree d = grading.at(p.id(i)).get<Multidegree>();
        if (num_vars < 0) num_vars = static_cast<int>(d.size());
        grades.push_back(std::move(d));
    }
    if (num_vars <= 0) bad("grading must be nonempty");
    return GradedPoset(std::move(p), num_vars, std::move(grades));
}

Json complex_to_json(const FreeComplex& f) {
    Json j;
    j["num_vars"] = f.num_vars;
    j["basis"] = f.basis;
    Json diffs = Json::array();
    for (const auto& level : f.diffs) {
        Json entries = Json::array();
        for (const auto& [r, c, v] : level)
            entries.push_back(Json::array({r, c, rational_to_json(v)}));
        diffs.push_back(entries);
    }
    j["differentials"] = diffs;
    return j;
}

FreeComplex complex_from_json(const Json& j) {
    if (!j.contains("num_vars") || !j.contains("basis")) bad("complex JSON needs 'num_vars' and 'basis'");
    FreeComplex f;
    f.num_vars = j.at("num_vars").get<int>();
    for (const auto& level : j.at("basis")) {
        std::vector<Multidegree> degs;
        for (const auto& d : level) degs.push_back(d.get<Multidegree>());
        f.basis.push_back(std::move(degs));
    }
    if (j.contains("differentials")) {
        for (const auto& level : j.at("differentials")) {
            SparseScalars entries;
            for (const auto& e : level) {
                if (!e.is_array() || e.size() != 3) bad("each differential entry must be [row, col, scalar]");
                entries.emplace_back(e[0].get<int>(), e[1].get<int>(), rational_from_json(e[2]));
            }
            f.diffs.push_back(std::move(entries));
        }
    }
    f.validate();
    return f;
}

Json betti_table_to_json(const BettiTable& t) {
    Json out = Json::array();
    for (const auto& [key, v] : t.beta) {
        Json row;
        row["d"] = key.first;
        row["degree"] = key.second;
        row["beta"] = v;
        out.push_back(row);
    }
    return out;
}

BettiTable betti_table_from_json(const Json& j) {
    BettiTable t;
    for (const auto& row : j) {
        const int d = row.at("d").get<int>();
        Multidegree deg = row.at("degree").get<Multidegree>();
        const long long beta = row.at("beta").get<long long>();
        if (beta < 0 || d < 0) bad("betti entries must be nonnegative");
        if (beta > 0) t.beta[{d, std::move(deg)}] = beta;
    }
    return t;
}

Json degree_map_to_json(const DegreeMap& m) {
    Json j;
    j["target_num_vars"] = m.target_num_vars;
    Json pairs = Json::array();
    for (const auto& [a, b] : m.pairs) pairs.push_back(Json::array({a, b}));
    j["map"] = pairs;
    return j;
}

DegreeMap degree_map_from_json(const Json& j) {
    DegreeMap m;
    if (!j.contains("target_num_vars") || !j.contains("map"))
        bad("degree map JSON needs 'target_num_vars' and 'map'");
    m.target_num_vars = j.at("target_num_vars").get<int>();
    for (const auto& pair : j.at("map")) {
        if (!pair.is_array() || pair.size() != 2) bad("each map entry must be [[src],[dst]]");
        m.pairs.emplace_back(pair[0].get<Multidegree>(), pair[1].get<Multidegree>());
    }
    m.validate();
    return m;
}

}  // namespace bettikit
