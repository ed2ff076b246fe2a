#include "lppforge/cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lppforge/serialize.hpp"

namespace lppforge {

namespace {

// Exit codes, stable and documented in the README:
//   2 invalid field, 3 invalid generators, 4 even order where odd is required,
//   5 exhaustive companion search found none, 6 invalid MOLS inputs,
//   7 census order above the enumeration limit, 1 other failures.
constexpr int kExitFieldError = 2;
constexpr int kExitGeneratorError = 3;
constexpr int kExitEvenOrder = 4;
constexpr int kExitNoCompanion = 5;
constexpr int kExitMolsInput = 6;
constexpr int kExitCensusLimit = 7;

struct FieldOptions {
    int p = 0;
    int r = 1;
    std::string modulus;  // comma-separated, low-to-high
    std::string order;    // semicolon-separated element labels
    std::string file;     // JSON descriptor
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
    return out;
}

Field::Ptr resolve_field(const FieldOptions& fo) {
    if (!fo.file.empty()) {
        std::ifstream in(fo.file);
        require(in.good(), errc::bad_input, "cannot read field file " + fo.file);
        json j = json::parse(in);
        return field_from_json(j);
    }
    require(fo.p != 0, errc::bad_input, "field required: pass -p/-r or --field FILE");
    std::optional<std::vector<int>> modulus;
    if (!fo.modulus.empty()) modulus = parse_int_list(fo.modulus);

    std::optional<std::vector<std::vector<int>>> order;
    if (!fo.order.empty()) {
        // Labels are parsed against a default-ordered field first.
        auto plain = Field::make(fo.p, fo.r, modulus);
        std::vector<std::vector<int>> rows;
        std::string token;
        std::istringstream in(fo.order);
        while (std::getline(in, token, ';')) rows.push_back(plain->coeffs(plain->parse(token)));
        order = std::move(rows);
    }
    return Field::make(fo.p, fo.r, std::move(modulus), std::move(order));
}

void add_field_options(CLI::App* cmd, FieldOptions& fo) {
    cmd->add_option("-p,--characteristic", fo.p, "prime characteristic");
    cmd->add_option("-r,--degree", fo.r, "extension degree");
    cmd->add_option("--modulus", fo.modulus, "modulus coefficients, low-to-high (e.g. 2,2,1)");
    cmd->add_option("--order", fo.order,
                    "element order as ;-separated labels (e.g. 0;u;u+1;1)");
    cmd->add_option("--field", fo.file, "field descriptor JSON file");
}

MPoly load_poly(const Field::Ptr& field, const std::string& source) {
    // Tiny inline forms for univariate permutation polynomials.
    if (source == "id" || source == "identity" || source == "x")
        return MPoly::variable(field, 1, 0);
    if (source.size() >= 3 && source.rfind("x^", 0) == 0)
        return MPoly::monomial(field, 1, {std::stol(source.substr(2))}, field->one());
    std::ifstream in(source);
    require(in.good(), errc::bad_input, "cannot read polynomial file " + source);
    json j = json::parse(in);
    return poly_from_json(field, j);
}

json grid_rows(const LatinSquare& L) {
    json rows = json::array();
    for (int i = 0; i < L.q; ++i) {
        std::vector<int> row(L.q);
        for (int j = 0; j < L.q; ++j) row[j] = L.at(i, j);
        rows.push_back(row);
    }
    return rows;
}

struct KlenianArgs {
    int e = 0;
    bool canonical = false;
    std::string base_cycle;
    std::string generators;  // "alpha;beta"
    std::string base;
};

void add_klenian_options(CLI::App* cmd, KlenianArgs& ka) {
    cmd->add_option("--e", ka.e, "block exponent e (l = p^e)");
    cmd->add_flag("--canonical", ka.canonical, "use the canonical block generators for e");
    cmd->add_option("--base-cycle", ka.base_cycle,
                    "q-cycle in cycle notation (implies e = 0); levels are its "
                    "successive powers starting from the first power");
    cmd->add_option("--generators", ka.generators,
                    "alpha;beta in cycle notation over element labels");
    cmd->add_option("--base", ka.base, "base permutation for level 0 (cycle notation)");
}

struct KlenianBuild {
    EKlenianGroup group;
    Perm base;
    MPoly poly;
    KlenianCompanionOptions companion_opts;
};

KlenianBuild build_klenian(const Field::Ptr& field, const KlenianArgs& ka) {
    const Field& F = *field;
    const int q = F.q();
    KlenianBuild out{EKlenianGroup{}, identity_perm(q), MPoly(field, 2), {}};
    if (!ka.base_cycle.empty()) {
        Perm beta = perm_from_cycle_string(F, ka.base_cycle);
        out.group = cycle_group(field, beta);
        // The cycle form reproduces the classical worked grids: level n holds
        // the (n+1)-st power, and the companion construction runs over the
        // cycle-induced point order with base beta^2.
        out.base = beta;
        std::string first = ka.base_cycle.substr(ka.base_cycle.find('(') + 1);
        first = first.substr(0, first.find_first_of(",)"));
        int start = F.index_of(F.parse(first));
        out.companion_opts.g_base = compose(beta, beta);
        out.companion_opts.point_order.resize(q);
        int cur = start;
        for (int k = 0; k < q; ++k) {
            out.companion_opts.point_order[k] = cur;
            cur = beta[cur];
        }
    } else if (!ka.generators.empty()) {
        auto semi = ka.generators.find(';');
        require(semi != std::string::npos, errc::invalid_generators,
                "--generators expects alpha;beta");
        Perm alpha = perm_from_cycle_string(F, ka.generators.substr(0, semi));
        Perm beta = perm_from_cycle_string(F, ka.generators.substr(semi + 1));
        out.group = eklenian_group_from_generators(field, ka.e, alpha, beta);
    } else {
        out.group = eklenian_group(field, ka.e);
    }
    if (!ka.base.empty()) out.base = perm_from_cycle_string(F, ka.base);
    out.poly = eklenian_poly(out.group, out.base);
    return out;
}

int finish_poly_output(std::ostream& out, const std::string& format, const Field& F,
                       const MPoly& poly, json j) {
    LatinSquare L = value_grid(poly);
    if (format == "grid") {
        out << latin_to_grid(F, L);
        return 0;
    }
    if (format == "csv") {
        out << latin_to_csv(L);
        return 0;
    }
    j["poly"] = poly_to_json(poly);
    j["poly_string"] = poly_to_string(poly);
    j["monomials"] = poly.monomial_count();
    auto deg = poly.total_degree();
    if (deg)
        j["degree"] = *deg;
    else
        j["degree"] = nullptr;
    j["grid"] = grid_rows(L);
    j["grid_text"] = latin_to_grid(F, L);
    out << j.dump(2) << "\n";
    return 0;
}

int map_error_exit(const Error& e, int field_code, int generator_code) {
    switch (e.code()) {
        case errc::not_prime:
        case errc::reducible_modulus:
        case errc::invalid_order:
            return field_code;
        case errc::invalid_generators:
            return generator_code;
        default:
            return 1;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"local permutation polynomials, group polynomials and MOLS over GF(p^r)"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json | csv | grid")
        ->check(CLI::IsMember({"json", "csv", "grid"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for sampled modes");
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for census")->check(CLI::PositiveNumber);

    // field
    auto* cmd_field = app.add_subcommand("field", "construct and print a field descriptor");
    int fp = 0, fr = 1;
    FieldOptions ffo;
    cmd_field->add_option("p", fp, "prime characteristic")->required();
    cmd_field->add_option("r", fr, "extension degree");
    cmd_field->add_option("--modulus", ffo.modulus, "modulus coefficients, low-to-high");
    cmd_field->add_option("--order", ffo.order, "element order as ;-separated labels");

    // klenian
    auto* cmd_klenian = app.add_subcommand("klenian", "build a group polynomial and its grid");
    FieldOptions kfo;
    KlenianArgs kargs;
    add_field_options(cmd_klenian, kfo);
    add_klenian_options(cmd_klenian, kargs);

    // companion
    auto* cmd_companion = app.add_subcommand("companion", "construct or search for a companion");
    FieldOptions cfo;
    KlenianArgs cargs;
    add_field_options(cmd_companion, cfo);
    add_klenian_options(cmd_companion, cargs);
    std::string companion_input;
    bool companion_klenian = false, companion_search = false;
    int sample_count = 0;
    cmd_companion->add_option("--input", companion_input, "polynomial JSON file");
    cmd_companion->add_flag("--klenian", companion_klenian,
                            "build the input from the klenian options");
    cmd_companion->add_flag("--search", companion_search,
                            "exhaustive LPP-companion search (exit 5 when none exists)");
    cmd_companion->add_option("--sample", sample_count,
                              "emit N sampled general companions instead");

    // mols
    auto* cmd_mols = app.add_subcommand("mols", "build a set of mutually orthogonal squares");
    FieldOptions mfo;
    add_field_options(cmd_mols, mfo);
    std::vector<std::string> pair_files, separated_files;
    std::string out_dir;
    cmd_mols->add_option("--pair", pair_files, "companion LPP pair: f.json g.json")
        ->expected(2);
    cmd_mols->add_option("--separated", separated_files,
                         "univariate permutation polynomials: f h (files, id, or x^k)")
        ->expected(2);
    cmd_mols->add_option("--out", out_dir, "directory for grid CSV files and the report");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a property of the inputs");
    FieldOptions vfo;
    add_field_options(cmd_verify, vfo);
    std::string what;
    std::vector<std::string> verify_inputs;
    std::string grid_file;
    cmd_verify->add_option("--what", what, "lpp | pp | orthogonal | mols | latin")->required();
    cmd_verify->add_option("--input", verify_inputs, "polynomial JSON files");
    cmd_verify->add_option("--grid", grid_file, "latin grid CSV file");

    // census
    auto* cmd_census = app.add_subcommand("census", "full enumeration census");
    FieldOptions xfo;
    add_field_options(cmd_census, xfo);
    bool with_companions = false, no_companions = false, stream_tuples = false;
    cmd_census->add_flag("--companions", with_companions, "force LPP-companion counting");
    cmd_census->add_flag("--no-companions", no_companions, "skip LPP-companion counting");
    cmd_census->add_flag("--stream", stream_tuples,
                         "emit every tuple as one JSON line instead of the report "
                         "(single-threaded, deterministic order)");

    std::vector<std::string> argv_copy(args);
    std::vector<char*> argv;
    argv.reserve(argv_copy.size() + 1);
    static std::string prog = "lppforge";
    argv.push_back(prog.data());
    for (auto& a : argv_copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, out, msg);
        err << msg.str();
        return code;
    }

    try {
        if (cmd_field->parsed()) {
            ffo.p = fp;
            ffo.r = fr;
            try {
                auto field = resolve_field(ffo);
                out << field_to_json(*field).dump(2) << "\n";
                return 0;
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
        }

        if (cmd_klenian->parsed()) {
            Field::Ptr field;
            try {
                field = resolve_field(kfo);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
            try {
                KlenianBuild kb = build_klenian(field, kargs);
                json j;
                j["field"] = field_to_json(*field);
                j["group"] = group_to_json(kb.group);
                j["base"] = perm_to_cycle_string(*field, kb.base);
                j["is_lpp"] = is_lpp(kb.poly);
                return finish_poly_output(out, format, *field, kb.poly, std::move(j));
            } catch (const Error& e) {
                err << e.what() << "\n";
                return map_error_exit(e, kExitFieldError, kExitGeneratorError);
            }
        }

        if (cmd_companion->parsed()) {
            Field::Ptr field;
            try {
                field = resolve_field(cfo);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
            try {
                MPoly f(field, 2);
                std::optional<KlenianBuild> kb;
                if (!companion_input.empty()) {
                    f = load_poly(field, companion_input);
                } else {
                    kb = build_klenian(field, cargs);
                    f = kb->poly;
                }

                if (sample_count > 0) {
                    auto samples = sample_companions(f, sample_count, seed);
                    json arr = json::array();
                    for (const auto& g : samples) {
                        arr.push_back(json{{"poly", poly_to_json(g)},
                                           {"poly_string", poly_to_string(g)},
                                           {"orthogonal", is_companion(f, g)}});
                    }
                    out << json{{"f", poly_to_json(f)}, {"samples", arr}}.dump(2) << "\n";
                    return 0;
                }

                MPoly g(field, 2);
                if (companion_search || !kb) {
                    std::vector<MPoly> found;
                    if (!companion_search && !kb.has_value()) {
                        // Plain --input path gets the cheap linear shortcut.
                        bool linear = true;
                        for (const auto& [e, c] : f.terms())
                            linear = linear && (e[0] + e[1] <= 1);
                        if (linear && !f.is_zero()) {
                            found.push_back(linear_companion(f));
                        }
                    }
                    if (found.empty()) found = enumerate_lpp_companions(f);
                    if (found.empty()) {
                        err << "no LPP companion\n";
                        return kExitNoCompanion;
                    }
                    g = found.front();
                } else {
                    try {
                        g = klenian_companion(kb->group, f, kb->companion_opts);
                    } catch (const Error& e) {
                        if (e.code() == errc::even_characteristic) {
                            err << e.what() << "\n";
                            return kExitEvenOrder;
                        }
                        throw;
                    }
                }

                LatinSquare Lf = value_grid(f), Lg = value_grid(g);
                json cert;
                {
                    const int q = field->q();
                    json pairs = json::array();
                    std::vector<int> hits(static_cast<size_t>(q) * q, 0);
                    for (int i = 0; i < q; ++i)
                        for (int jj = 0; jj < q; ++jj) {
                            pairs.push_back({Lf.at(i, jj), Lg.at(i, jj)});
                            ++hits[Lf.at(i, jj) * q + Lg.at(i, jj)];
                        }
                    bool distinct =
                        std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
                    cert = json{{"superimposed_pairs", pairs}, {"all_distinct", distinct}};
                }

                if (format == "grid") {
                    out << grids_side_by_side(*field, Lf, Lg);
                    return 0;
                }
                if (format == "csv") {
                    out << latin_to_csv(Lg);
                    return 0;
                }
                json j;
                j["field"] = field_to_json(*field);
                j["f"] = poly_to_json(f);
                j["f_string"] = poly_to_string(f);
                j["g"] = poly_to_json(g);
                j["g_string"] = poly_to_string(g);
                j["g_monomials"] = g.monomial_count();
                j["g_degree"] = g.total_degree() ? json(*g.total_degree()) : json(nullptr);
                j["orthogonal"] = is_companion(f, g);
                j["certificate"] = std::move(cert);
                j["grids_text"] = grids_side_by_side(*field, Lf, Lg);
                out << j.dump(2) << "\n";
                return 0;
            } catch (const Error& e) {
                err << e.what() << "\n";
                return map_error_exit(e, kExitFieldError, kExitGeneratorError);
            }
        }

        if (cmd_mols->parsed()) {
            Field::Ptr field;
            try {
                field = resolve_field(mfo);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
            try {
                MolsSet set;
                if (!pair_files.empty()) {
                    MPoly f = load_poly(field, pair_files[0]);
                    MPoly g = load_poly(field, pair_files[1]);
                    set = mols_from_pair(f, g);
                } else if (!separated_files.empty()) {
                    MPoly f = load_poly(field, separated_files[0]);
                    MPoly h = load_poly(field, separated_files[1]);
                    set = mols_separated(field, f, h);
                } else {
                    fail(errc::bad_input, "pass --pair or --separated");
                }
                json report = mols_to_json(set);
                if (!out_dir.empty()) {
                    for (int i = 0; i < set.size(); ++i) {
                        std::ofstream gout(out_dir + "/grid_" + std::to_string(i + 1) + ".csv");
                        gout << latin_to_csv(value_grid(set.polys[i]));
                    }
                    std::ofstream rout(out_dir + "/report.json");
                    rout << report.dump(2) << "\n";
                    out << "wrote " << set.size() << " grids to " << out_dir << "\n";
                } else if (format == "grid") {
                    for (const auto& f : set.polys)
                        out << latin_to_grid(*field, value_grid(f)) << "\n";
                } else if (format == "csv") {
                    for (const auto& f : set.polys) out << latin_to_csv(value_grid(f)) << "\n";
                } else {
                    out << report.dump(2) << "\n";
                }
                return 0;
            } catch (const Error& e) {
                err << e.what() << "\n";
                switch (e.code()) {
                    case errc::not_prime:
                    case errc::reducible_modulus:
                    case errc::invalid_order:
                        return kExitFieldError;
                    default:
                        return kExitMolsInput;
                }
            }
        }

        if (cmd_verify->parsed()) {
            Field::Ptr field;
            try {
                field = resolve_field(vfo);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
            bool ok = false;
            json details;
            if (what == "lpp" || what == "pp") {
                require(verify_inputs.size() == 1, errc::bad_input,
                        "verify " + what + " takes one --input polynomial");
                MPoly f = load_poly(field, verify_inputs[0]);
                ok = what == "lpp" ? is_lpp(f) : is_permutation_poly(f);
            } else if (what == "orthogonal") {
                require(verify_inputs.size() >= 2, errc::bad_input,
                        "verify orthogonal takes at least two --input polynomials");
                std::vector<MPoly> fs;
                for (const auto& path : verify_inputs) fs.push_back(load_poly(field, path));
                ok = is_orthogonal_system(fs);
            } else if (what == "mols") {
                require(verify_inputs.size() >= 1, errc::bad_input,
                        "verify mols takes --input polynomials");
                MolsSet set;
                for (const auto& path : verify_inputs) set.polys.push_back(load_poly(field, path));
                ok = is_mols(set);
                details["complete"] = is_complete(set);
                details["members_latin"] = all_members_latin(set);
            } else if (what == "latin") {
                require(!grid_file.empty(), errc::bad_input, "verify latin takes --grid FILE");
                std::ifstream in(grid_file);
                require(in.good(), errc::bad_input, "cannot read " + grid_file);
                std::stringstream buf;
                buf << in.rdbuf();
                LatinSquare L = latin_from_csv(field->q(), buf.str());
                ok = is_latin(L);
            } else {
                fail(errc::bad_input, "unknown --what " + what);
            }
            json j;
            j["what"] = what;
            j["ok"] = ok;
            if (!details.empty()) j["details"] = details;
            out << j.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        if (cmd_census->parsed()) {
            Field::Ptr field;
            try {
                field = resolve_field(xfo);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return kExitFieldError;
            }
            CensusOptions opts;
            opts.workers = workers;
            if (with_companions) opts.with_companions = true;
            if (no_companions) opts.with_companions = false;
            if (const char* env = std::getenv("LPP_FORGE_LIMIT")) {
                opts.max_order = std::max(opts.max_order, std::atoi(env));
            }
            try {
                if (stream_tuples) {
                    enumerate_lpps(
                        field,
                        [&](const PermTuple& t) {
                            json row = json::array();
                            for (const auto& b : t)
                                row.push_back(std::vector<int>(b.begin(), b.end()));
                            out << json{{"tuple", row}}.dump() << "\n";
                            return true;
                        },
                        opts.max_order);
                    return 0;
                }
                CensusReport report = census(field, opts);
                out << census_to_json(report).dump(2) << "\n";
                return 0;
            } catch (const Error& e) {
                if (e.code() == errc::too_large) {
                    err << "exceeds enumeration limit: " << e.what() << "\n";
                    return kExitCensusLimit;
                }
                throw;
            }
        }

        err << "no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lppforge
