#include "bettikit/ideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bettikit {

std::vector<std::string> default_var_names(int m) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Multidegree> generators,
                             std::vector<std::string> var_names)
    : num_vars_(num_vars), var_names_(std::move(var_names)) {
    if (num_vars <= 0) throw std::invalid_argument("ideal needs a positive number of variables");
    if (var_names_.empty()) var_names_ = default_var_names(num_vars);
    if (static_cast<int>(var_names_.size()) != num_vars)
        throw std::invalid_argument("variable name count does not match num_vars");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != num_vars)
            throw std::invalid_argument("generator length does not match num_vars");
        for (int e : g)
            if (e < 0) throw std::invalid_argument("generator exponents must be nonnegative");
        if (is_zero_degree(g))
            throw std::invalid_argument("the unit monomial cannot be a generator");
    }
    // minimalize: drop any generator divisible by another
    std::sort(generators.begin(), generators.end(), degree_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators_) {
            if (divides(h, g)) { redundant = true; break; }
        }
        if (!redundant) generators_.push_back(g);
    }
    if (generators_.empty()) throw std::invalid_argument("ideal needs at least one generator");
}

bool in_degree_support(const MonomialIdeal& ideal, const Multidegree& a) {
    if (static_cast<int>(a.size()) != ideal.num_vars())
        throw std::invalid_argument("multidegree dimension does not match the ideal");
    for (const auto& g : ideal.generators())
        if (divides(g, a)) return true;
    return false;
}

std::string monomial_string(const Multidegree& a, const std::vector<std::string>& names) {
    if (a.size() != names.size()) throw std::invalid_argument("monomial_string: name count mismatch");
    std::string out;
    bool need_star = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (need_star && names[i].size() > 1) out += "*";
        out += names[i];
        if (a[i] != 1) out += "^" + std::to_string(a[i]);
        need_star = true;
    }
    return out.empty() ? "1" : out;
}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// One monomial over the declared names. Juxtaposition is only unambiguous
// when every name is a single letter; otherwise '*' is required.
Multidegree parse_monomial(const std::string& text, const std::map<std::string, int>& var_index,
                           int num_vars, bool single_letter_names) {
    Multidegree deg(static_cast<std::size_t>(num_vars), 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty monomial");
    if (text[i] == '1' && [&] {
            std::size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            return j == text.size();
        }())
        throw std::invalid_argument("the unit monomial cannot be a generator");
    bool seen_factor = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '*') {
            if (!seen_factor) throw std::invalid_argument("misplaced '*' in monomial '" + text + "'");
            ++i;
            skip_ws();
        }
        if (i == text.size()) throw std::invalid_argument("trailing '*' in monomial '" + text + "'");
        std::string name;
        if (single_letter_names) {
            if (!is_name_char(text[i]))
                throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "' in monomial '" + text + "'");
            name = std::string(1, text[i]);
            ++i;
        } else {
            std::size_t start = i;
            while (i < text.size() && is_name_char(text[i])) ++i;
            name = text.substr(start, i - start);
            if (name.empty())
                throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "' in monomial '" + text + "'");
        }
        auto it = var_index.find(name);
        if (it == var_index.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        long long exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("missing exponent in monomial '" + text + "'");
            exp = std::stoll(text.substr(start, i - start));
        }
        deg[static_cast<std::size_t>(it->second)] += static_cast<int>(exp);
        seen_factor = true;
    }
    if (!seen_factor) throw std::invalid_argument("empty monomial");
    return deg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

MonomialIdeal parse_monomial_list(const std::string& text) {
    // Optional "variables: ..." declaration, separated from the generator
    // list by ';' or a newline; "generators:" prefix is optional.
    std::string vars_part, gens_part = text;
    for (char sep : {';', '\n'}) {
        auto pos = text.find(sep);
        if (pos != std::string::npos && trim(text.substr(0, pos)).rfind("variables", 0) == 0) {
            vars_part = trim(text.substr(0, pos));
            gens_part = text.substr(pos + 1);
            break;
        }
    }
    if (vars_part.empty() && trim(text).rfind("variables", 0) == 0)
        throw std::invalid_argument("variable declaration without generators");

    std::vector<std::string> names;
    if (!vars_part.empty()) {
        auto colon = vars_part.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("malformed variable declaration");
        for (const auto& piece : split(vars_part.substr(colon + 1), ',')) {
            std::string name = trim(piece);
            if (name.empty()) throw std::invalid_argument("empty variable name");
            for (char c : name)
                if (!is_name_char(c)) throw std::invalid_argument("bad variable name '" + name + "'");
            names.push_back(name);
        }
    } else {
        // No declaration: every distinct letter is a variable, sorted.
        std::set<char> letters;
        for (char c : gens_part)
            if (std::isalpha(static_cast<unsigned char>(c))) letters.insert(c);
        for (char c : letters) names.emplace_back(1, c);
    }
    if (names.empty()) throw std::invalid_argument("no variables");
    std::map<std::string, int> var_index;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!var_index.emplace(names[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate variable '" + names[i] + "'");
    }
    bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });

    std::string gl = trim(gens_part);
    if (gl.rfind("generators", 0) == 0) {
        auto colon = gl.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("malformed generator list");
        gl = gl.substr(colon + 1);
    }
    std::vector<Multidegree> gens;
    for (const auto& piece : split(gl, ',')) {
        std::string mono = trim(piece);
        if (mono.empty()) throw std::invalid_argument("empty monomial in generator list");
        gens.push_back(parse_monomial(mono, var_index, static_cast<int>(names.size()), single));
    }
    return MonomialIdeal(static_cast<int>(names.size()), std::move(gens), std::move(names));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty ideal source");
    if (t.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(t);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed ideal JSON: ") + e.what());
        }
        if (!j.contains("variables") || !j.contains("generators"))
            throw std::invalid_argument("ideal JSON needs 'variables' and 'generators'");
        std::vector<std::string> names = j.at("variables").get<std::vector<std::string>>();
        std::vector<Multidegree> gens;
        for (const auto& g : j.at("generators")) gens.push_back(g.get<Multidegree>());
        return MonomialIdeal(static_cast<int>(names.size()), std::move(gens), std::move(names));
    }
    return parse_monomial_list(t);
}

}  // namespace bettikit
