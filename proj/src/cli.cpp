#include "benthad/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "benthad/bent.hpp"
#include "benthad/groebner.hpp"
#include "benthad/io.hpp"
#include "benthad/numeric.hpp"
#include "benthad/symmetry.hpp"

namespace benthad::cli {

namespace {

using nlohmann::json;

json monomial_json(const MonomialMatrix& m)
{
    return json{{"perm", m.perm()}, {"signs", m.signs()}};
}

json group_json(const BigInt& order, const std::vector<json>& generators)
{
    return json{{"order", order.str()},
                {"order_factored", factored(order)},
                {"num_generators", generators.size()},
                {"generators", generators}};
}

int resolve_threads(int flag_value)
{
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("BENTHAD_THREADS")) {
        int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    return 1;
}

const char* method_name(SearchMethod m)
{
    switch (m) {
    case SearchMethod::exhaust:
        return "exhaust";
    case SearchMethod::eigen:
        return "eigen";
    case SearchMethod::groebner:
        return "groebner";
    }
    return "?";
}

json search_json(const HadamardMatrix& h, const SearchResult& r)
{
    std::vector<std::string> seqs;
    seqs.reserve(r.sequences.size());
    for (const auto& s : r.sequences)
        seqs.push_back(s.str());
    return json{{"matrix_id", content_hash(h)},
                {"method", method_name(r.method)},
                {"v", h.order()},
                {"k", r.stats.k},
                {"count", r.sequences.size()},
                {"sequences", seqs},
                {"elapsed_ms", r.stats.elapsed_ms}};
}

json describe_matrix(const HadamardMatrix& h)
{
    json j{{"valid", true},
           {"v", h.order()},
           {"symmetric", h.symmetric()},
           {"matrix_id", content_hash(h)}};
    if (auto u = h.root_u()) {
        j["u"] = *u;
        j["bush_type"] = h.bush_type();
    }
    if (auto s = h.row_sum_constant())
        j["sigma"] = *s;
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hadamard matrices, self-dual bent sequences and their symmetry groups"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags like --out may follow the subcommand

    std::string out_path, format = "json";
    int threads_flag = 0;
    app.add_option("--out", out_path, "write the matrix (construct/kron) or the report to this path");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json"}));
    app.add_option("--threads", threads_flag,
                   "worker threads (default: BENTHAD_THREADS or 1)");

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a matrix");
    std::string cons_kind;
    std::vector<std::string> cons_args;
    c_construct->add_option("kind", cons_kind, "sylvester|paley")->required();
    c_construct->add_option("args", cons_args, "sylvester H | paley Q I|II");
    int size_limit = kDefaultSizeLimit;
    app.add_option("--size-limit", size_limit, "constructor order guard");

    // search
    auto* c_search = app.add_subcommand("search", "find (self-dual) bent sequences");
    std::string s_matrix, s_method = "eigen", s_mode = "self_dual",
                s_gorder = "lex";
    int k_limit = kDefaultKLimit, exhaust_limit = kDefaultExhaustLimit,
        groebner_limit = kDefaultGroebnerLimit;
    c_search->add_option("--matrix", s_matrix, "alias or .had path")->required();
    c_search->add_option("--method", s_method, "exhaust|eigen|groebner")
        ->check(CLI::IsMember({"exhaust", "eigen", "groebner"}));
    c_search->add_option("--mode", s_mode, "self_dual|bent (exhaust only)")
        ->check(CLI::IsMember({"self_dual", "bent"}));
    c_search->add_option("--k-limit", k_limit, "eigenspace dimension guard");
    c_search->add_option("--exhaust-limit", exhaust_limit, "exhaustion order guard");
    c_search->add_option("--groebner-limit", groebner_limit,
                         "Groebner variable guard");
    c_search->add_option("--groebner-order", s_gorder, "lex|degrevlex")
        ->check(CLI::IsMember({"lex", "degrevlex"}));

    // group commands
    std::string g_matrix;
    auto* c_saut = app.add_subcommand("saut", "strong automorphism group");
    c_saut->add_option("matrix", g_matrix, "alias or .had path")->required();
    auto* c_aut = app.add_subcommand("aut", "full automorphism group (pairs)");
    c_aut->add_option("matrix", g_matrix, "alias or .had path")->required();
    auto* c_cgroup = app.add_subcommand("cgroup", "permutation part C(H)");
    c_cgroup->add_option("matrix", g_matrix, "alias or .had path")->required();
    auto* c_pol = app.add_subcommand("polarities", "involutions of C(H)");
    c_pol->add_option("matrix", g_matrix, "alias or .had path")->required();
    long pol_limit = kDefaultPolarityLimit;
    c_pol->add_option("--enum-limit", pol_limit, "element enumeration guard");

    // equiv
    auto* c_equiv = app.add_subcommand("equiv", "strong equivalence test");
    std::string e_a, e_b;
    bool e_strong = false;
    c_equiv->add_option("a", e_a)->required();
    c_equiv->add_option("b", e_b)->required();
    c_equiv->add_flag("--strong", e_strong, "strong equivalence (the default and only mode)");

    // verify
    auto* c_verify = app.add_subcommand("verify", "validate and classify a matrix");
    c_verify->add_option("matrix", g_matrix, "alias or .had path")->required();

    // kron
    auto* c_kron = app.add_subcommand("kron", "Kronecker product");
    std::string k_a, k_b;
    c_kron->add_option("a", k_a)->required();
    c_kron->add_option("b", k_b)->required();

    // orth
    auto* c_orth = app.add_subcommand("orth", "orthogonal matrices over GF(2)");
    int orth_m = 0;
    c_orth->add_option("m", orth_m, "dimension")->required();

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("benthad");
        for (const auto& a : argv)
            cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    int threads = resolve_threads(threads_flag);

    try {
        json report;
        report["version"] = kVersion;
        std::string matrix_id;
        json results;
        std::string command;

        if (app.got_subcommand(c_construct)) {
            command = "construct";
            HadamardMatrix h = [&]() {
                if (cons_kind == "sylvester") {
                    if (cons_args.size() != 1)
                        throw CLI::ValidationError("construct",
                                                   "sylvester takes one argument");
                    return HadamardMatrix::sylvester(std::stoi(cons_args[0]),
                                                     size_limit);
                }
                if (cons_kind == "paley") {
                    if (cons_args.size() != 2)
                        throw CLI::ValidationError(
                            "construct", "paley takes q and a kind (I or II)");
                    PaleyKind kind;
                    if (cons_args[1] == "I" || cons_args[1] == "1")
                        kind = PaleyKind::I;
                    else if (cons_args[1] == "II" || cons_args[1] == "2")
                        kind = PaleyKind::II;
                    else
                        throw CLI::ValidationError("construct",
                                                   "kind must be I or II");
                    return HadamardMatrix::paley(std::stoi(cons_args[0]), kind,
                                                 size_limit);
                }
                throw CLI::ValidationError("construct",
                                           "kind must be sylvester or paley");
            }();
            matrix_id = content_hash(h);
            results = describe_matrix(h);
            report["parameters"] = {{"kind", cons_kind}, {"args", cons_args}};
            if (!out_path.empty()) {
                write_matrix_file(h, out_path);
                results["written"] = out_path;
            } else {
                results["had"] = to_had(h);
            }
        } else if (app.got_subcommand(c_search)) {
            command = "search";
            HadamardMatrix h = resolve_matrix(s_matrix, size_limit);
            matrix_id = content_hash(h);
            SearchMode mode =
                s_mode == "bent" ? SearchMode::bent : SearchMode::self_dual;
            SearchResult r;
            if (s_method == "exhaust") {
                r = search_exhaustive(h, mode, exhaust_limit, threads);
            } else if (s_method == "eigen") {
                if (mode == SearchMode::bent)
                    throw CLI::ValidationError("search",
                                               "--mode bent needs --method exhaust");
                r = search_eigenspace(h, k_limit, threads);
            } else {
                if (mode == SearchMode::bent)
                    throw CLI::ValidationError("search",
                                               "--mode bent needs --method exhaust");
                auto t1 = std::chrono::steady_clock::now();
                MonomialOrder ord = s_gorder == "degrevlex"
                                        ? MonomialOrder::degrevlex
                                        : MonomialOrder::lex;
                auto ideal = build_system(h, ord);
                auto basis = buchberger(ideal, groebner_limit);
                r.method = SearchMethod::groebner;
                r.sequences = solve_pm1(basis, ideal.nvars, ord);
                r.stats.k = ideal.nvars;
                r.stats.candidates = r.sequences.size();
                r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                         std::chrono::steady_clock::now() - t1)
                                         .count();
            }
            results = search_json(h, r);
            report["parameters"] = {{"matrix", s_matrix},
                                    {"method", s_method},
                                    {"mode", s_mode},
                                    {"k_limit", k_limit},
                                    {"exhaust_limit", exhaust_limit},
                                    {"threads", threads}};
        } else if (app.got_subcommand(c_saut)) {
            command = "saut";
            HadamardMatrix h = resolve_matrix(g_matrix, size_limit);
            matrix_id = content_hash(h);
            auto g = saut(h);
            std::vector<json> gens;
            for (const auto& m : g.generators)
                gens.push_back(monomial_json(m));
            results = group_json(g.order, gens);
            report["parameters"] = {{"matrix", g_matrix}};
        } else if (app.got_subcommand(c_aut)) {
            command = "aut";
            HadamardMatrix h = resolve_matrix(g_matrix, size_limit);
            matrix_id = content_hash(h);
            auto g = full_aut(h);
            std::vector<json> gens;
            for (const auto& [p, q] : g.generator_pairs)
                gens.push_back(json{{"p", monomial_json(p)}, {"q", monomial_json(q)}});
            results = group_json(g.order, gens);
            report["parameters"] = {{"matrix", g_matrix}};
        } else if (app.got_subcommand(c_cgroup)) {
            command = "cgroup";
            HadamardMatrix h = resolve_matrix(g_matrix, size_limit);
            matrix_id = content_hash(h);
            auto g = c_group(h);
            std::vector<json> gens;
            for (const auto& p : g.generators())
                gens.push_back(
                    monomial_json(MonomialMatrix::permutation(p.img)));
            results = group_json(g.order(), gens);
            report["parameters"] = {{"matrix", g_matrix}};
        } else if (app.got_subcommand(c_pol)) {
            command = "polarities";
            HadamardMatrix h = resolve_matrix(g_matrix, size_limit);
            matrix_id = content_hash(h);
            auto pols = polarities(h, pol_limit);
            std::vector<std::vector<int>> perms;
            perms.reserve(pols.size());
            for (const auto& p : pols)
                perms.push_back(p.img);
            results = json{{"count", pols.size()}, {"polarities", perms}};
            report["parameters"] = {{"matrix", g_matrix}, {"enum_limit", pol_limit}};
        } else if (app.got_subcommand(c_equiv)) {
            command = "equiv";
            HadamardMatrix a = resolve_matrix(e_a, size_limit);
            HadamardMatrix b = resolve_matrix(e_b, size_limit);
            matrix_id = content_hash(a);
            auto w = strong_equivalent(a, b);
            results = json{{"equivalent", w.has_value()},
                           {"matrix_id_other", content_hash(b)}};
            if (w)
                results["witness"] = monomial_json(*w);
            report["parameters"] = {{"a", e_a}, {"b", e_b}, {"strong", true}};
        } else if (app.got_subcommand(c_verify)) {
            command = "verify";
            HadamardMatrix h = resolve_matrix(g_matrix, size_limit);
            matrix_id = content_hash(h);
            results = describe_matrix(h);
            report["parameters"] = {{"matrix", g_matrix}};
        } else if (app.got_subcommand(c_kron)) {
            command = "kron";
            HadamardMatrix a = resolve_matrix(k_a, size_limit);
            HadamardMatrix b = resolve_matrix(k_b, size_limit);
            HadamardMatrix h = HadamardMatrix::kronecker(a, b, size_limit);
            matrix_id = content_hash(h);
            results = describe_matrix(h);
            report["parameters"] = {{"a", k_a}, {"b", k_b}};
            if (!out_path.empty()) {
                write_matrix_file(h, out_path);
                results["written"] = out_path;
            } else {
                results["had"] = to_had(h);
            }
        } else if (app.got_subcommand(c_orth)) {
            command = "orth";
            auto mats = orth_group(orth_m);
            std::vector<std::vector<std::string>> rows;
            rows.reserve(mats.size());
            for (const auto& a : mats) {
                std::vector<std::string> r;
                for (int i = 0; i < orth_m; ++i) {
                    std::string bits(static_cast<size_t>(orth_m), '0');
                    for (int jb = 0; jb < orth_m; ++jb)
                        if ((a[i] >> jb) & 1)
                            bits[jb] = '1';
                    r.push_back(std::move(bits));
                }
                rows.push_back(std::move(r));
            }
            matrix_id = "";
            results = json{{"m", orth_m}, {"count", mats.size()}, {"matrices", rows}};
            report["parameters"] = {{"m", orth_m}};
        }

        report["command"] = command;
        report["matrix_id"] = matrix_id;
        report["results"] = results;
        report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();

        bool report_to_file =
            !out_path.empty() && command != "construct" && command != "kron";
        if (report_to_file) {
            std::ofstream f(out_path);
            if (!f)
                throw ParseError("cannot write '" + out_path + "'");
            f << report.dump(2) << "\n";
        } else {
            out << report.dump(2) << "\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace benthad::cli
