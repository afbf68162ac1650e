// codent: exact computations with the F2 x Z4 matrix groups, Type II code
// catalog, symmetrized weight enumerators and dimension series.

#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "codent/catalog.hpp"
#include "codent/generators.hpp"
#include "codent/json_io.hpp"
#include "codent/util.hpp"
#include "codent/verify.hpp"

using namespace codent;
using nlohmann::json;

namespace {

std::vector<CMatrix> load_generators(const std::string& path) {
    json j = io::load_json_file(path);
    const json& arr = j.is_array() ? j : j.at("generators");
    std::vector<CMatrix> out;
    for (const auto& m : arr) out.push_back(io::matrix_from_json(m));
    return out;
}

std::vector<CMatrix> generators_by_name(const std::string& name) {
    if (name == "G" || name == "g") return catalog::g_generators();
    if (name == "H" || name == "h") return catalog::h_generators();
    throw NotFound("unknown catalog group '" + name + "' (expected G or H)");
}

GenMatrix code_by_id(const std::string& id) {
    static const std::map<std::string, GenMatrix (*)()> codes = {
        {"E8", catalog::code_e8},   {"Q8", catalog::code_q8},   {"K8", catalog::code_k8},
        {"D16", catalog::code_d16}, {"K16", catalog::code_k16},
    };
    auto it = codes.find(id);
    if (it == codes.end()) throw NotFound("unknown catalog code '" + id + "'");
    return it->second();
}

int cmd_group(const std::string& spec_path, const std::string& gens_path,
              const std::string& catalog_name, size_t limit, unsigned threads,
              const std::string& emit_elements) {
    std::vector<CMatrix> gens;
    if (!catalog_name.empty())
        gens = generators_by_name(catalog_name);
    else
        gens = load_generators(gens_path);
    if (!spec_path.empty()) io::ring_from_json(io::load_json_file(spec_path)); // validates
    ClosureOptions opts;
    opts.limit = limit;
    opts.threads = threads;
    Stopwatch watch;
    GroupClosure group = close_group(gens, opts);
    std::cout << "order " << group.order() << " (dim " << group.dim() << ", "
              << static_cast<long>(watch.elapsed_ms()) << " ms)\n";
    if (!emit_elements.empty()) {
        json arr = json::array();
        for (size_t i = 0; i < group.order(); ++i) arr.push_back(io::matrix_to_json(group.element(i)));
        io::save_json_file(emit_elements, arr);
        std::cout << "elements written to " << emit_elements << "\n";
    }
    return 0;
}

int cmd_code(const std::string& file, const std::string& id, const std::string& check,
             size_t limit, const std::string& strategy_name) {
    GenMatrix g = file.empty() ? code_by_id(id) : io::genmatrix_from_json(io::load_json_file(file));
    EnumStrategy strategy = EnumStrategy::Auto;
    if (strategy_name == "coeff") strategy = EnumStrategy::CoefficientTuples;
    if (strategy_name == "closure") strategy = EnumStrategy::AdditiveClosure;
    CodeSet c = enumerate_code(g, limit, strategy);
    std::cout << "length " << c.length() << " over Z_" << c.modulus() << ", " << c.size()
              << " codewords\n";
    bool ok = true;
    if (check == "selfdual" || check == "all" || check == "type2") {
        bool sd = is_self_dual(c);
        std::cout << "self-dual: " << (sd ? "yes" : "no") << "\n";
        ok = ok && sd;
    }
    if (check == "type2" || check == "all") {
        bool t2 = is_type2(c);
        std::cout << "type II: " << (t2 ? "yes" : "no") << "\n";
        ok = ok && t2;
    }
    return ok ? 0 : 1;
}

int cmd_swe(const std::string& spec_path, const std::vector<std::string>& code_args,
            const std::string& out_path, size_t pairs_limit, unsigned threads, bool text) {
    RingSpec spec = spec_path.empty() ? catalog::ring_f2_z4()
                                      : io::ring_from_json(io::load_json_file(spec_path));
    std::vector<CodeSet> codes;
    for (const auto& arg : code_args) {
        GenMatrix g = arg.starts_with("id:") ? code_by_id(arg.substr(3))
                                             : io::genmatrix_from_json(io::load_json_file(arg));
        codes.push_back(enumerate_code(g));
    }
    std::vector<const CodeSet*> ptrs;
    for (const auto& c : codes) ptrs.push_back(&c);
    SweOptions opts;
    opts.pairs_limit = pairs_limit;
    opts.threads = threads;
    SWEPoly poly = swe(ptrs, spec, opts);
    if (text)
        std::cout << poly.to_text() << "\n";
    else if (out_path.empty())
        std::cout << io::poly_to_json(poly).dump(1) << "\n";
    if (!out_path.empty()) {
        io::save_json_file(out_path, io::poly_to_json(poly));
        std::cout << poly.term_count() << " terms written to " << out_path << "\n";
    }
    return 0;
}

int cmd_molien(const std::string& group_name, const std::string& gens_path, size_t order,
               const std::string& formula_path, bool check_formula_h, long deep_degree,
               unsigned threads) {
    std::vector<CMatrix> gens =
        gens_path.empty() ? generators_by_name(group_name) : load_generators(gens_path);
    ClosureOptions copts;
    copts.threads = threads;
    GroupClosure group = close_group(gens, copts);
    MolienOptions mopts;
    mopts.threads = threads;
    RationalSeries series = molien_series(group, order, mopts);
    std::cout << io::series_to_json(series).dump() << "\n";
    int rc = 0;
    std::optional<RationalFormula> formula;
    if (check_formula_h) formula = catalog::molien_formula_h();
    if (!formula_path.empty()) formula = io::formula_from_json(io::load_json_file(formula_path));
    if (formula) {
        RationalSeries expanded = expand_formula(*formula, order);
        bool ok = expanded == series;
        std::cout << "formula match: " << (ok ? "yes" : "no") << "\n";
        if (!ok) rc = 1;
    }
    if (deep_degree >= 0) {
        size_t dim = fixed_space_dim(gens, static_cast<size_t>(deep_degree));
        bool ok = static_cast<size_t>(deep_degree) > order ||
                  series.coeff(static_cast<size_t>(deep_degree)) == Rational(static_cast<long>(dim));
        std::cout << "fixed-space dimension at degree " << deep_degree << ": " << dim
                  << (ok ? " (matches series)" : " (DISAGREES with series)") << "\n";
        if (!ok) rc = 1;
    }
    return rc;
}

int cmd_invariance(const std::string& poly_path, const std::string& gens_path,
                   const std::string& catalog_name) {
    SWEPoly poly = io::poly_from_json(io::load_json_file(poly_path));
    std::vector<CMatrix> gens =
        gens_path.empty() ? generators_by_name(catalog_name) : load_generators(gens_path);
    bool all = true;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool ok = act(gens[i], poly) == poly;
        std::cout << "generator " << i << ": " << (ok ? "fixed" : "moved") << "\n";
        all = all && ok;
    }
    std::cout << (all ? "invariant" : "not invariant") << "\n";
    return all ? 0 : 1;
}

int cmd_independence(const std::vector<std::string>& poly_paths, const std::string& monomials) {
    std::vector<SWEPoly> polys;
    for (const auto& p : poly_paths) polys.push_back(io::poly_from_json(io::load_json_file(p)));
    if (polys.empty()) throw DomainError("need at least one polynomial");
    size_t nv = polys[0].nvars();
    std::vector<ExpVec> monos;
    size_t start = 0;
    while (start < monomials.size()) {
        size_t comma = monomials.find(',', start);
        if (comma == std::string::npos) comma = monomials.size();
        monos.push_back(parse_monomial(monomials.substr(start, comma - start), nv));
        start = comma + 1;
    }
    CMatrix m = coefficient_matrix(polys, monos);
    std::cout << m.to_text();
    if (m.rows() != m.cols()) {
        std::cout << "rank " << m.rank() << "\n";
        return m.rank() == std::min(m.rows(), m.cols()) ? 0 : 1;
    }
    Cyclo8 det = m.det();
    std::cout << "det = " << det.to_text() << "\n";
    return det.is_zero() ? 1 : 0;
}

int cmd_verify(const std::string& config_path, bool skip_g, long deep_degree, long pairs_limit,
               const std::string& claims, unsigned threads, const std::string& json_out,
               bool quiet) {
    VerifyOptions opts;
    if (!config_path.empty()) opts = VerifyOptions::from_config(io::load_json_file(config_path));
    if (skip_g) opts.skip_g = true;
    if (deep_degree >= 0) opts.deep_degree = static_cast<size_t>(deep_degree);
    if (pairs_limit > 0) opts.pairs_limit = static_cast<size_t>(pairs_limit);
    if (!claims.empty()) opts.claims_filter = claims;
    if (threads) opts.threads = threads;
    ClaimCallback cb = nullptr;
    if (!quiet)
        cb = [](const Claim& c) {
            const char* v = c.verdict == Claim::Verdict::Pass   ? "PASS"
                            : c.verdict == Claim::Verdict::Fail ? "FAIL"
                                                                : "SKIP";
            std::cout << "[" << v << "] " << c.id << "  expected=" << c.expected
                      << "  computed=" << c.computed << "  (" << static_cast<long>(c.elapsed_ms)
                      << " ms, rss " << c.rss_kb / 1024 << " MB)" << std::endl;
        };
    VerificationReport report = run_verification(opts, cb);
    if (!quiet)
        std::cout << (report.overall_pass() ? "OVERALL: pass" : "OVERALL: fail") << " ("
                  << report.count(Claim::Verdict::Pass) << " pass, "
                  << report.count(Claim::Verdict::Fail) << " fail, "
                  << report.count(Claim::Verdict::Skip) << " skip)\n";
    if (!report.overall_pass()) {
        std::cout << "failing claims:";
        for (const auto& c : report.claims)
            if (c.verdict == Claim::Verdict::Fail) std::cout << " " << c.id;
        std::cout << "\n";
    }
    if (!json_out.empty()) io::save_json_file(json_out, report.to_json());
    return report.overall_pass() ? 0 : 1;
}

int cmd_emit(const std::string& what, const std::string& id, const std::string& format) {
    bool text = format == "text";
    if (what == "matrix") {
        static const std::map<std::string, CMatrix (*)()> mats = {
            {"chi", catalog::ref_chi},
            {"xi_u1", catalog::ref_xi_u1},
            {"xi_u2", catalog::ref_xi_u2},
            {"eta_s1", catalog::ref_eta_s1},
            {"eta_s2", catalog::ref_eta_s2},
            {"zeta8", catalog::ref_zeta8},
            {"phi_chi", catalog::ref_phi_chi},
            {"phi_xi_u1", catalog::ref_phi_xi_u1},
            {"phi_xi_u2", catalog::ref_phi_xi_u2},
            {"phi_eta_s1", catalog::ref_phi_eta_s1},
            {"phi_eta_s2", catalog::ref_phi_eta_s2},
            {"phi_zeta8", catalog::ref_phi_zeta8},
        };
        auto it = mats.find(id);
        if (it == mats.end()) throw NotFound("unknown matrix id '" + id + "'");
        CMatrix m = it->second();
        std::cout << (text ? m.to_text() : io::matrix_to_json(m).dump(1) + "\n");
        return 0;
    }
    if (what == "poly") {
        SWEPoly p = id == "W_E8_Q8"   ? catalog::ref_swe_e8_q8()
                    : id == "W_E8_K8" ? catalog::ref_swe_e8_k8()
                                      : throw NotFound("unknown poly id '" + id + "'");
        std::cout << (text ? p.to_text() + "\n" : io::poly_to_json(p).dump(1) + "\n");
        return 0;
    }
    if (what == "series") {
        if (id == "molien_H") {
            RationalSeries s = expand_formula(catalog::molien_formula_h(), 56);
            std::cout << (text ? s.to_text() + "\n" : io::series_to_json(s).dump() + "\n");
            return 0;
        }
        if (id == "formula_H") {
            std::cout << io::formula_to_json(catalog::molien_formula_h()).dump(1) << "\n";
            return 0;
        }
        throw NotFound("unknown series id '" + id + "'");
    }
    if (what == "code") {
        GenMatrix g = code_by_id(id);
        if (text) {
            for (const auto& row : g.rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << row[i] << (i + 1 < row.size() ? " " : "");
                std::cout << "\n";
            }
        } else {
            std::cout << io::genmatrix_to_json(g).dump(1) << "\n";
        }
        return 0;
    }
    throw NotFound("unknown emit kind '" + what + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Type II code enumerators and their invariant matrix groups"};
    app.require_subcommand(1);

    // group
    auto* group = app.add_subcommand("group", "close a matrix group and report its order");
    std::string g_spec, g_gens, g_catalog, g_emit;
    size_t g_limit = 1u << 20;
    unsigned g_threads = 0;
    group->add_option("--spec", g_spec, "ring spec JSON (validated if given)");
    group->add_option("--generators", g_gens, "generator matrices JSON");
    group->add_option("--catalog", g_catalog, "built-in generator set: G or H");
    group->add_option("--limit", g_limit, "element limit");
    group->add_option("--threads", g_threads, "worker threads");
    group->add_option("--emit-elements", g_emit, "write the element set as JSON");

    // code
    auto* code = app.add_subcommand("code", "enumerate a code and certify it");
    std::string c_file, c_id, c_check = "all", c_strategy = "auto";
    size_t c_limit = 1u << 26;
    code->add_option("--file", c_file, "generator matrix JSON");
    code->add_option("--id", c_id, "catalog code id (E8, Q8, K8, D16, K16)");
    code->add_option("--check", c_check, "selfdual | type2 | all | none");
    code->add_option("--limit", c_limit, "span size limit");
    code->add_option("--strategy", c_strategy, "auto | coeff | closure");

    // swe
    auto* sw = app.add_subcommand("swe", "symmetrized weight enumerator of a code tuple");
    std::string s_spec, s_out;
    std::vector<std::string> s_codes;
    size_t s_pairs = 1u << 25;
    unsigned s_threads = 0;
    bool s_text = false;
    sw->add_option("--spec", s_spec, "ring spec JSON (default: the F2 x Z4 instance)");
    sw->add_option("--codes", s_codes, "code files (or id:E8 style catalog ids)")->required();
    sw->add_option("--out", s_out, "output polynomial JSON path");
    sw->add_option("--pairs-limit", s_pairs, "codeword tuple limit");
    sw->add_option("--threads", s_threads, "worker threads");
    sw->add_flag("--text", s_text, "print the text form");

    // molien
    auto* mo = app.add_subcommand("molien", "Molien series of a closed group");
    std::string m_group = "H", m_gens, m_formula;
    size_t m_order = 56;
    long m_deep = -1;
    unsigned m_threads = 0;
    bool m_check_h = false;
    mo->add_option("--group", m_group, "catalog group: G or H");
    mo->add_option("--generators", m_gens, "generator matrices JSON (overrides --group)");
    mo->add_option("--order", m_order, "truncation order");
    mo->add_option("--formula", m_formula, "rational formula JSON to compare against");
    mo->add_flag("--check-formula-h", m_check_h, "compare against the built-in H formula");
    mo->add_option("--deep-degree", m_deep, "also compute the fixed-space dimension directly");
    mo->add_option("--threads", m_threads, "worker threads");

    // invariance
    auto* inv = app.add_subcommand("invariance", "check act(g, f) = f for each generator");
    std::string i_poly, i_gens, i_catalog = "H";
    inv->add_option("--poly", i_poly, "polynomial JSON")->required();
    inv->add_option("--generators", i_gens, "generator matrices JSON");
    inv->add_option("--catalog", i_catalog, "built-in generator set: G or H");

    // independence
    auto* ind = app.add_subcommand("independence", "coefficient matrix rank/determinant");
    std::vector<std::string> d_polys;
    std::string d_monos;
    ind->add_option("--polys", d_polys, "polynomial JSON files")->required();
    ind->add_option("--monomials", d_monos, "comma-separated monomials, e.g. a8,b8")->required();

    // verify-paper
    auto* ver = app.add_subcommand("verify-paper", "recompute and certify every catalog claim");
    std::string v_config, v_claims, v_json;
    bool v_skip_g = false, v_quiet = false;
    long v_deep = -1, v_pairs = -1;
    unsigned v_threads = 0;
    ver->add_option("--config", v_config, "options JSON");
    ver->add_flag("--skip-G", v_skip_g, "skip the large group closure");
    ver->add_option("--deep-degree", v_deep, "extra fixed-space degree");
    ver->add_option("--pairs-limit", v_pairs, "codeword tuple limit");
    ver->add_option("--claims", v_claims, "comma-separated claim-id substrings to run");
    ver->add_option("--threads", v_threads, "worker threads");
    ver->add_option("--json", v_json, "write the report as JSON");
    ver->add_flag("--quiet", v_quiet, "suppress per-claim output");

    // emit
    auto* em = app.add_subcommand("emit", "print a catalog object");
    std::string e_what, e_id, e_format = "text";
    em->add_option("--what", e_what, "matrix | poly | series | code")->required();
    em->add_option("--id", e_id, "object id")->required();
    em->add_option("--format", e_format, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (group->parsed()) {
            if (g_catalog.empty() && g_gens.empty())
                throw DomainError("group needs --generators or --catalog");
            return cmd_group(g_spec, g_gens, g_catalog, g_limit, g_threads, g_emit);
        }
        if (code->parsed()) {
            if (c_file.empty() == c_id.empty())
                throw DomainError("code needs exactly one of --file or --id");
            return cmd_code(c_file, c_id, c_check, c_limit, c_strategy);
        }
        if (sw->parsed()) return cmd_swe(s_spec, s_codes, s_out, s_pairs, s_threads, s_text);
        if (mo->parsed())
            return cmd_molien(m_group, m_gens, m_order, m_formula, m_check_h, m_deep, m_threads);
        if (inv->parsed()) return cmd_invariance(i_poly, i_gens, i_catalog);
        if (ind->parsed()) return cmd_independence(d_polys, d_monos);
        if (ver->parsed())
            return cmd_verify(v_config, v_skip_g, v_deep, v_pairs, v_claims, v_threads, v_json,
                              v_quiet);
        if (em->parsed()) return cmd_emit(e_what, e_id, e_format);
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
