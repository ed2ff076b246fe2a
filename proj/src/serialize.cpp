#include "lppforge/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lppforge {

json field_to_json(const Field& F) {
    json j;
    j["p"] = F.p();
    j["r"] = F.r();
    j["modulus"] = F.modulus();
    json order = json::array();
    for (felem e : F.order()) order.push_back(F.coeffs(e));
    j["order"] = order;
    return j;
}

Field::Ptr field_from_json(const json& j) {
    require(j.contains("p") && j.contains("r"), errc::bad_input,
            "field descriptor needs p and r");
    int p = j.at("p").get<int>();
    int r = j.at("r").get<int>();
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<int>>();
    std::optional<std::vector<std::vector<int>>> order;
    if (j.contains("order")) order = j.at("order").get<std::vector<std::vector<int>>>();
    return Field::make(p, r, std::move(modulus), std::move(order));
}

json poly_to_json(const MPoly& f) {
    json j;
    j["nvars"] = f.nvars();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json term;
        term["exps"] = std::vector<int>(e.begin(), e.end());
        term["coeff"] = f.field().coeffs(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

MPoly poly_from_json(const Field::Ptr& field, const json& j) {
    require(j.contains("nvars") && j.contains("terms"), errc::bad_input,
            "polynomial needs nvars and terms");
    const int nvars = j.at("nvars").get<int>();
    MPoly f(field, nvars);
    for (const auto& term : j.at("terms")) {
        auto exps = term.at("exps").get<std::vector<long>>();
        felem c;
        const auto& cj = term.at("coeff");
        if (cj.is_array())
            c = field->from_coeffs(cj.get<std::vector<int>>());
        else if (cj.is_number_integer())
            c = field->from_int(cj.get<long>());
        else
            c = field->parse(cj.get<std::string>());
        f = add(f, MPoly::monomial(field, nvars, exps, c));
    }
    return f;
}

namespace {

std::string var_name(int nvars, int i) {
    if (nvars <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

} // namespace

std::string poly_to_string(const MPoly& f) {
    if (f.is_zero()) return "0";
    const Field& F = f.field();
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < f.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(f.nvars(), i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = F.label(c);
        bool composite = cs.find('+') != std::string::npos;
        if (mono.empty()) {
            out += composite ? "(" + cs + ")" : cs;
        } else if (c == F.one()) {
            out += mono;
        } else {
            out += (composite ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

std::string perm_to_cycle_string(const Field& F, const Perm& a) {
    auto cs = cycles(a);
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
        out += "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ",";
            out += F.label(F.element(cyc[i]));
        }
        out += ")";
    }
    return out;
}

json perm_to_json(const Field& F, const Perm& a) {
    json j;
    j["image"] = std::vector<int>(a.begin(), a.end());
    j["cycles"] = perm_to_cycle_string(F, a);
    return j;
}

Perm perm_from_cycle_string(const Field& F, const std::string& text) {
    const int q = F.q();
    std::vector<std::vector<int>> cs;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        require(text[i] == '(', errc::bad_input, "expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        std::string token;
        for (; i < text.size() && text[i] != ')'; ++i) {
            if (text[i] == ',') {
                cyc.push_back(F.index_of(F.parse(token)));
                token.clear();
            } else {
                token += text[i];
            }
        }
        require(i < text.size(), errc::bad_input, "unbalanced cycle notation");
        ++i;  // ')'
        if (!token.empty()) cyc.push_back(F.index_of(F.parse(token)));
        if (!cyc.empty()) cs.push_back(std::move(cyc));
        skip_ws();
    }
    return perm_from_cycles(q, cs);
}

json group_to_json(const EKlenianGroup& G) {
    const Field& F = *G.field;
    json j;
    j["e"] = G.e;
    j["l"] = G.l;
    j["t"] = G.t;
    j["alpha"] = perm_to_cycle_string(F, G.alpha);
    j["beta"] = perm_to_cycle_string(F, G.beta);
    json elems = json::array();
    for (const auto& g : G.elements) elems.push_back(perm_to_json(F, g));
    j["elements"] = std::move(elems);
    return j;
}

std::string latin_to_csv(const LatinSquare& L) {
    std::string out;
    for (int i = 0; i < L.q; ++i) {
        for (int j = 0; j < L.q; ++j) {
            if (j) out += ",";
            out += std::to_string(L.at(i, j));
        }
        out += "\n";
    }
    return out;
}

LatinSquare latin_from_csv(int q, const std::string& text) {
    LatinSquare L;
    L.q = q;
    L.cells.reserve(static_cast<size_t>(q) * q);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            int v = std::stoi(cell);
            require(v >= 0 && v < q, errc::bad_input, "grid entry out of range");
            L.cells.push_back(static_cast<std::uint8_t>(v));
        }
    }
    require(static_cast<int>(L.cells.size()) == q * q, errc::bad_input,
            "grid must have q*q entries");
    return L;
}

std::string latin_to_grid(const Field& F, const LatinSquare& L) {
    std::vector<std::string> labels(L.q);
    size_t width = 1;
    for (int k = 0; k < L.q; ++k) {
        labels[k] = F.label(F.element(k));
        width = std::max(width, labels[k].size());
    }
    std::string out;
    for (int i = 0; i < L.q; ++i) {
        for (int j = 0; j < L.q; ++j) {
            const std::string& s = labels[L.at(i, j)];
            out += std::string(width - s.size() + (j ? 2 : 0), ' ');
            out += s;
        }
        out += "\n";
    }
    return out;
}

std::string grids_side_by_side(const Field& F, const LatinSquare& a, const LatinSquare& b) {
    std::istringstream sa(latin_to_grid(F, a)), sb(latin_to_grid(F, b));
    std::string la, lb, out;
    while (std::getline(sa, la) && std::getline(sb, lb)) {
        out += la + "    |  " + lb + "\n";
    }
    return out;
}

json census_to_json(const CensusReport& report) {
    json j;
    j["q"] = report.q;
    j["total_lpps"] = report.total_lpps;
    json ek = json::object();
    for (auto [e, n] : report.eklenian_counts) ek[std::to_string(e)] = n;
    j["eklenian_counts"] = std::move(ek);
    json eq = json::object();
    for (auto [e, n] : report.equivalent_by_e) eq[std::to_string(e)] = n;
    j["equivalent_by_e"] = std::move(eq);
    j["equivalent_to_eklenian"] = report.equivalent_to_eklenian;
    if (report.lpps_with_lpp_companion) {
        j["lpps_with_lpp_companion"] = *report.lpps_with_lpp_companion;
        json hist = json::object();
        for (auto [n, c] : report.companion_counts) hist[std::to_string(n)] = c;
        j["companion_counts"] = std::move(hist);
    }
    if (report.equivalence_classes) j["equivalence_classes"] = *report.equivalence_classes;
    return j;
}

json mols_to_json(const MolsSet& set) {
    json j;
    j["q"] = set.q();
    j["size"] = set.size();
    json squares = json::array();
    json latin_flags = json::array();
    for (const auto& f : set.polys) {
        LatinSquare L = value_grid(f);
        json rows = json::array();
        for (int i = 0; i < L.q; ++i) {
            std::vector<int> row(L.q);
            for (int jj = 0; jj < L.q; ++jj) row[jj] = L.at(i, jj);
            rows.push_back(row);
        }
        squares.push_back(std::move(rows));
        latin_flags.push_back(is_lpp(f));
    }
    j["squares"] = std::move(squares);
    j["members_latin"] = std::move(latin_flags);
    j["pairwise_orthogonal"] = is_mols(set);
    j["complete"] = is_complete(set);

    // Superimposition check: each pair of squares must tile all q^2 ordered
    // value pairs exactly once.
    json checks = json::array();
    const int q = set.q();
    for (int a = 0; a < set.size(); ++a) {
        for (int b = a + 1; b < set.size(); ++b) {
            LatinSquare A = value_grid(set.polys[a]);
            LatinSquare B = value_grid(set.polys[b]);
            std::vector<int> hits(static_cast<size_t>(q) * q, 0);
            for (int i = 0; i < q; ++i)
                for (int jj = 0; jj < q; ++jj) ++hits[A.at(i, jj) * q + B.at(i, jj)];
            bool ok = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
            checks.push_back(json{{"pair", {a, b}}, {"all_pairs_distinct", ok}});
        }
    }
    j["superimposition"] = std::move(checks);
    return j;
}

} // namespace lppforge
