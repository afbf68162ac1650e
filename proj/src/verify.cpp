#include "codent/verify.hpp"

#include <optional>
#include <random>
#include <sstream>

#include "codent/catalog.hpp"
#include "codent/generators.hpp"
#include "codent/json_io.hpp"
#include "codent/util.hpp"

namespace codent {

VerifyOptions VerifyOptions::from_config(const nlohmann::json& config) {
    VerifyOptions o;
    if (config.contains("skip_g")) o.skip_g = config["skip_g"].get<bool>();
    if (config.contains("deep_degree")) o.deep_degree = config["deep_degree"].get<size_t>();
    if (config.contains("pairs_limit")) o.pairs_limit = config["pairs_limit"].get<size_t>();
    if (config.contains("closure_limit")) o.closure_limit = config["closure_limit"].get<size_t>();
    if (config.contains("threads")) o.threads = config["threads"].get<unsigned>();
    if (config.contains("claims")) o.claims_filter = config["claims"].get<std::string>();
    if (config.contains("codes"))
        for (const auto& [id, path] : config["codes"].items())
            o.code_overrides[id] = path.get<std::string>();
    return o;
}

bool VerificationReport::overall_pass() const {
    for (const auto& c : claims)
        if (c.verdict == Claim::Verdict::Fail) return false;
    return true;
}

size_t VerificationReport::count(Claim::Verdict v) const {
    size_t n = 0;
    for (const auto& c : claims)
        if (c.verdict == v) ++n;
    return n;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : claims) {
        arr.push_back({{"claim", c.id},
                       {"criterion", c.criterion},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"verdict", c.verdict == Claim::Verdict::Pass   ? "pass"
                                   : c.verdict == Claim::Verdict::Fail ? "fail"
                                                                       : "skip"},
                       {"elapsed_ms", c.elapsed_ms},
                       {"rss_kb", c.rss_kb}});
    }
    return {{"claims", std::move(arr)}, {"overall", overall_pass() ? "pass" : "fail"}};
}

std::string VerificationReport::to_table() const {
    std::ostringstream os;
    for (const auto& c : claims) {
        const char* v = c.verdict == Claim::Verdict::Pass   ? "PASS"
                        : c.verdict == Claim::Verdict::Fail ? "FAIL"
                                                            : "SKIP";
        os << "[" << v << "] " << c.id << "  expected=" << c.expected
           << "  computed=" << c.computed << "  (" << static_cast<long>(c.elapsed_ms)
           << " ms, rss " << c.rss_kb / 1024 << " MB)\n";
    }
    os << (overall_pass() ? "OVERALL: pass" : "OVERALL: fail") << " (" << count(Claim::Verdict::Pass)
       << " pass, " << count(Claim::Verdict::Fail) << " fail, " << count(Claim::Verdict::Skip)
       << " skip)\n";
    return os.str();
}

namespace {

struct Runner {
    const VerifyOptions& opts;
    VerificationReport& report;
    const ClaimCallback& on_claim;

    bool wanted(const std::string& id) const {
        if (opts.claims_filter.empty()) return true;
        size_t start = 0;
        const std::string& f = opts.claims_filter;
        while (start < f.size()) {
            size_t comma = f.find(',', start);
            if (comma == std::string::npos) comma = f.size();
            std::string token = f.substr(start, comma - start);
            if (!token.empty() && id.find(token) != std::string::npos) return true;
            start = comma + 1;
        }
        return false;
    }

    // fn returns {expected, computed, pass}
    void claim(const std::string& id, int criterion,
               const std::function<std::tuple<std::string, std::string, bool>()>& fn,
               bool skip = false, const std::string& skip_reason = "skipped") {
        if (!wanted(id)) return;
        Claim c;
        c.id = id;
        c.criterion = criterion;
        if (skip) {
            c.verdict = Claim::Verdict::Skip;
            c.expected = skip_reason;
            c.computed = "-";
        } else {
            Stopwatch watch;
            try {
                auto [expected, computed, pass] = fn();
                c.expected = expected;
                c.computed = computed;
                c.verdict = pass ? Claim::Verdict::Pass : Claim::Verdict::Fail;
            } catch (const std::exception& e) {
                c.expected = "no error";
                c.computed = std::string("error: ") + e.what();
                c.verdict = Claim::Verdict::Fail;
            }
            c.elapsed_ms = watch.elapsed_ms();
        }
        c.rss_kb = peak_rss_kb();
        report.claims.push_back(c);
        if (on_claim) on_claim(report.claims.back());
    }
};

std::string fmt_bool(bool ok) { return ok ? "true" : "false"; }

GenMatrix load_code(const VerifyOptions& opts, const std::string& id, GenMatrix fallback) {
    auto it = opts.code_overrides.find(id);
    if (it == opts.code_overrides.end()) return fallback;
    return io::genmatrix_from_json(io::load_json_file(it->second));
}

std::string describe_code(const CodeSet& c) {
    std::ostringstream os;
    os << c.size() << " words, self-dual=" << fmt_bool(is_self_dual(c))
       << ", type2=" << fmt_bool(is_type2(c));
    return os.str();
}

} // namespace

VerificationReport run_verification(const VerifyOptions& opts, const ClaimCallback& on_claim) {
    VerificationReport report;
    Runner run{opts, report, on_claim};
    RingSpec spec = catalog::ring_f2_z4();

    // --- criterion 1: generator fidelity --------------------------------
    std::vector<CMatrix> ggens = catalog::g_generators();
    std::vector<CMatrix> hgens = catalog::h_generators();
    const CMatrix refs_g[6] = {catalog::ref_chi(),    catalog::ref_xi_u1(),
                               catalog::ref_xi_u2(),  catalog::ref_eta_s1(),
                               catalog::ref_eta_s2(), catalog::ref_zeta8()};
    const CMatrix refs_h[6] = {catalog::ref_phi_chi(),    catalog::ref_phi_xi_u1(),
                               catalog::ref_phi_xi_u2(),  catalog::ref_phi_eta_s1(),
                               catalog::ref_phi_eta_s2(), catalog::ref_phi_zeta8()};
    for (size_t i = 0; i < 6; ++i) {
        run.claim("c1.generator." + std::string(catalog::kGeneratorNames[i]), 1, [&, i] {
            bool ok = ggens[i] == refs_g[i];
            return std::tuple{std::string("reference 8x8 matrix"),
                              std::string(ok ? "equal" : "mismatch"), ok};
        });
    }
    for (size_t i = 0; i < 6; ++i) {
        run.claim("c1.symmetrized." + std::string(catalog::kGeneratorNames[i]), 1, [&, i] {
            bool ok = hgens[i] == refs_h[i];
            return std::tuple{std::string("reference 6x6 matrix"),
                              std::string(ok ? "equal" : "mismatch"), ok};
        });
    }

    // --- criterion 2: group orders ---------------------------------------
    ClosureOptions copts;
    copts.limit = opts.closure_limit;
    copts.threads = opts.threads;
    std::optional<GroupClosure> H;
    run.claim("c2.order.h", 2, [&] {
        H.emplace(close_group(hgens, copts));
        return std::tuple{std::to_string(catalog::kOrderH), std::to_string(H->order()),
                          H->order() == catalog::kOrderH};
    });
    run.claim(
        "c2.order.g", 2,
        [&] {
            GroupClosure G = close_group(ggens, copts);
            return std::tuple{std::to_string(catalog::kOrderG), std::to_string(G.order()),
                              G.order() == catalog::kOrderG};
        },
        opts.skip_g, "skipped by --skip-G");

    // --- criterion 3: code certification ---------------------------------
    auto enumerate = [&](const GenMatrix& g) { return enumerate_code(g); };
    std::optional<CodeSet> e8, q8, k8, d16, k16, e8e8, q8q8, q8k8, k8k8;
    struct CodeClaim {
        const char* id;
        std::optional<CodeSet>* slot;
        std::function<GenMatrix()> gen;
        size_t size;
    };
    GenMatrix gm_e8 = load_code(opts, "E8", catalog::code_e8());
    GenMatrix gm_q8 = load_code(opts, "Q8", catalog::code_q8());
    GenMatrix gm_k8 = load_code(opts, "K8", catalog::code_k8());
    GenMatrix gm_d16 = load_code(opts, "D16", catalog::code_d16());
    GenMatrix gm_k16 = load_code(opts, "K16", catalog::code_k16());
    const CodeClaim code_claims[] = {
        {"c3.code.e8", &e8, [&] { return gm_e8; }, 16},
        {"c3.code.q8", &q8, [&] { return gm_q8; }, 256},
        {"c3.code.k8", &k8, [&] { return gm_k8; }, 256},
        {"c3.code.d16", &d16, [&] { return gm_d16; }, 256},
        {"c3.code.k16", &k16, [&] { return gm_k16; }, 65536},
        {"c3.code.e8+e8", &e8e8, [&] { return direct_sum(gm_e8, gm_e8); }, 256},
        {"c3.code.q8+q8", &q8q8, [&] { return direct_sum(gm_q8, gm_q8); }, 65536},
        {"c3.code.q8+k8", &q8k8, [&] { return direct_sum(gm_q8, gm_k8); }, 65536},
        {"c3.code.k8+k8", &k8k8, [&] { return direct_sum(gm_k8, gm_k8); }, 65536},
    };
    for (const auto& cc : code_claims) {
        run.claim(cc.id, 3, [&] {
            cc.slot->emplace(enumerate(cc.gen()));
            const CodeSet& c = **cc.slot;
            bool ok = c.size() == cc.size && is_self_dual(c) && is_type2(c);
            return std::tuple{std::to_string(cc.size) + " words, self-dual, type II",
                              describe_code(c), ok};
        });
    }
    // anything below needs the code catalog; enumerate leftovers quietly
    auto ensure = [&](std::optional<CodeSet>& slot, const GenMatrix& g) -> CodeSet& {
        if (!slot) slot.emplace(enumerate(g));
        return *slot;
    };
    ensure(e8, gm_e8);
    ensure(q8, gm_q8);
    ensure(k8, gm_k8);

    // --- criterion 4: degree-8 enumerators -------------------------------
    SweOptions sopts;
    sopts.pairs_limit = opts.pairs_limit;
    sopts.threads = opts.threads;
    std::optional<SWEPoly> w_eq, w_ek;
    run.claim("c4.swe.e8_q8", 4, [&] {
        w_eq.emplace(swe({&*e8, &*q8}, spec, sopts));
        bool ok = *w_eq == catalog::ref_swe_e8_q8();
        return std::tuple{std::string("reference polynomial, 38 terms"),
                          std::to_string(w_eq->term_count()) + " terms, " +
                              std::string(ok ? "equal" : "mismatch"),
                          ok};
    });
    run.claim("c4.swe.e8_k8", 4, [&] {
        w_ek.emplace(swe({&*e8, &*k8}, spec, sopts));
        bool ok = *w_ek == catalog::ref_swe_e8_k8();
        return std::tuple{std::string("reference polynomial, 26 terms"),
                          std::to_string(w_ek->term_count()) + " terms, " +
                              std::string(ok ? "equal" : "mismatch"),
                          ok};
    });
    if (!w_eq) w_eq.emplace(swe({&*e8, &*q8}, spec, sopts));
    if (!w_ek) w_ek.emplace(swe({&*e8, &*k8}, spec, sopts));

    // --- criterion 5: invariance (degree 8) ------------------------------
    run.claim("c5.invariance.deg8.w_e8_q8", 5, [&] {
        bool ok = is_invariant(*w_eq, hgens);
        return std::tuple{std::string("fixed by all six generators"), fmt_bool(ok), ok};
    });
    run.claim("c5.invariance.deg8.w_e8_k8", 5, [&] {
        bool ok = is_invariant(*w_ek, hgens);
        return std::tuple{std::string("fixed by all six generators"), fmt_bool(ok), ok};
    });

    // --- criterion 6: degree-8 independence ------------------------------
    run.claim("c6.independence.deg8", 6, [&] {
        std::vector<ExpVec> monos = {parse_monomial("a8", 6), parse_monomial("b8", 6)};
        CMatrix m = coefficient_matrix({*w_eq, *w_ek}, monos);
        CMatrix expect(2, 2);
        expect.at(0, 0) = Cyclo8(1);
        expect.at(0, 1) = Cyclo8(32);
        expect.at(1, 0) = Cyclo8(1);
        expect.at(1, 1) = Cyclo8(128);
        Cyclo8 det = m.det();
        bool ok = (m == expect) && det == Cyclo8(96);
        return std::tuple{std::string("[[1,32],[1,128]], det 96"),
                          "det " + det.to_text() + (m == expect ? "" : ", matrix mismatch"), ok};
    });

    // --- degree-16 enumerators (criteria 5, 6, 8) -------------------------
    std::optional<SWEPoly> w2_eq, w2_ek, w_ee_qk, w_ee_k16, w_d16_qq, w_d16_qk, w_ee_qq;
    auto build_deg16 = [&](std::optional<SWEPoly>& slot, std::optional<CodeSet>& c1,
                           const GenMatrix& g1, std::optional<CodeSet>& c2, const GenMatrix& g2) {
        ensure(c1, g1);
        ensure(c2, g2);
        slot.emplace(swe({&*c1, &*c2}, spec, sopts));
    };
    struct Deg16Claim {
        const char* id;
        std::function<void()> build;
        std::optional<SWEPoly>* poly;
    };
    GenMatrix gm_e8e8 = direct_sum(gm_e8, gm_e8);
    const Deg16Claim deg16[] = {
        {"w2_e8_q8", [&] { w2_eq.emplace(w_eq->pow(2)); }, &w2_eq},
        {"w2_e8_k8", [&] { w2_ek.emplace(w_ek->pow(2)); }, &w2_ek},
        {"e8e8_q8k8", [&] { build_deg16(w_ee_qk, e8e8, gm_e8e8, q8k8, direct_sum(gm_q8, gm_k8)); },
         &w_ee_qk},
        {"e8e8_k16", [&] { build_deg16(w_ee_k16, e8e8, gm_e8e8, k16, gm_k16); }, &w_ee_k16},
        {"d16_q8q8", [&] { build_deg16(w_d16_qq, d16, gm_d16, q8q8, direct_sum(gm_q8, gm_q8)); },
         &w_d16_qq},
        {"d16_q8k8", [&] { build_deg16(w_d16_qk, d16, gm_d16, q8k8, direct_sum(gm_q8, gm_k8)); },
         &w_d16_qk},
    };
    for (const auto& d : deg16) {
        run.claim("c5.invariance.deg16." + std::string(d.id), 5, [&] {
            d.build();
            bool homogeneous = (*d.poly)->is_homogeneous() && (*d.poly)->degree() == 16;
            bool ok = homogeneous && is_invariant(**d.poly, hgens);
            return std::tuple{std::string("homogeneous degree 16, fixed by all six generators"),
                              std::to_string((*d.poly)->term_count()) + " terms, invariant=" +
                                  fmt_bool(ok),
                              ok};
        });
    }
    bool need_deg16 = run.wanted("c6.independence.deg16") || run.wanted("c8.mass") ||
                      run.wanted("c8.multiplicativity");
    if (need_deg16)
        for (const auto& d : deg16)
            if (!*d.poly) d.build();

    run.claim("c6.independence.deg16", 6, [&] {
        std::vector<SWEPoly> polys = {*w2_eq,    *w2_ek,    *w_ee_qk,
                                      *w_ee_k16, *w_d16_qq, *w_d16_qk};
        CMatrix m = coefficient_matrix(polys, catalog::independence_monomials_deg16());
        Cyclo8 det = m.det();
        return std::tuple{std::string("nonzero determinant"), "det " + det.to_text(),
                          !det.is_zero()};
    });

    // --- criterion 7: Molien ----------------------------------------------
    MolienOptions mopts;
    mopts.threads = opts.threads;
    std::optional<RationalSeries> molien;
    run.claim("c7.molien.series", 7, [&] {
        if (!H) H.emplace(close_group(hgens, copts));
        molien.emplace(molien_series(*H, 48, mopts));
        std::map<size_t, long> expected;
        for (auto [deg, dim] : catalog::molien_coeffs_h()) expected[deg] = dim;
        bool ok = true;
        std::ostringstream got;
        for (size_t i = 0; i <= 48; ++i) {
            Rational want(expected.count(i) ? expected[i] : 0);
            if (molien->coeffs[i] != want) ok = false;
            if (molien->coeffs[i] != 0)
                got << (got.tellp() > 0 ? ", " : "") << "t^" << i << ":" << molien->coeffs[i];
        }
        return std::tuple{std::string("1, 2, 6, 20, 46, 96, 195 at t^0,t^8,...,t^48, else 0"),
                          got.str(), ok};
    });
    run.claim("c7.molien.formula", 7, [&] {
        if (!H) H.emplace(close_group(hgens, copts));
        RationalSeries series = molien_series(*H, 56, mopts);
        RationalSeries formula = expand_formula(catalog::molien_formula_h(), 56);
        bool ok = series == formula;
        return std::tuple{std::string("formula expansion equals group series to t^56"),
                          fmt_bool(ok), ok};
    });

    // --- criterion 8: cross-validation ------------------------------------
    run.claim("c8.fixed.deg1", 8, [&] {
        size_t dim = fixed_space_dim(hgens, 1);
        return std::tuple{std::string("0"), std::to_string(dim), dim == 0};
    });
    run.claim("c8.fixed.deg8", 8, [&] {
        size_t dim = fixed_space_dim(hgens, 8);
        bool ok = dim == 2 && (!molien || molien->coeff(8) == 2);
        return std::tuple{std::string("2 (= series coefficient at t^8)"), std::to_string(dim), ok};
    });
    if (opts.deep_degree != 1 && opts.deep_degree != 8) {
        run.claim("c8.fixed.deg" + std::to_string(opts.deep_degree), 8, [&] {
            size_t dim = fixed_space_dim(hgens, opts.deep_degree);
            std::string expect = "series coefficient";
            bool ok = true;
            if (molien && opts.deep_degree < molien->coeffs.size()) {
                expect = rational_text(molien->coeff(opts.deep_degree));
                ok = molien->coeff(opts.deep_degree) == Rational(static_cast<long>(dim));
            }
            return std::tuple{expect, std::to_string(dim), ok};
        });
    }
    run.claim("c8.mass", 8, [&] {
        struct Entry {
            const SWEPoly* poly;
            unsigned long mass;
        };
        std::vector<Entry> entries = {
            {&*w_eq, 4096},
            {&*w_ek, 4096},
            {&*w_ee_qk, 16777216},
            {&*w_ee_k16, 16777216},
            {&*w_d16_qq, 16777216},
            {&*w_d16_qk, 16777216},
        };
        if (!w_ee_qq) build_deg16(w_ee_qq, e8e8, gm_e8e8, q8q8, direct_sum(gm_q8, gm_q8));
        entries.push_back({&*w_ee_qq, 16777216});
        std::vector<Cyclo8> ones(6, Cyclo8(1));
        bool ok = true;
        for (const auto& [poly, mass] : entries)
            if (evaluate(*poly, ones) != Cyclo8(Rational(mass))) ok = false;
        return std::tuple{std::string("all-ones evaluation equals the tuple count, 7 enumerators"),
                          fmt_bool(ok), ok};
    });
    run.claim("c8.multiplicativity", 8, [&] {
        if (!w_ee_qq) build_deg16(w_ee_qq, e8e8, gm_e8e8, q8q8, direct_sum(gm_q8, gm_q8));
        bool ok = *w_ee_qq == *w2_eq;
        return std::tuple{std::string("swe(E8+E8, Q8+Q8) equals swe(E8,Q8)^2"), fmt_bool(ok), ok};
    });

    // --- criterion 9: property suites --------------------------------------
    run.claim("c9.cyclo_axioms", 9, [&] {
        std::mt19937_64 rng(20240811);
        std::uniform_int_distribution<long> num(-12, 12);
        std::uniform_int_distribution<long> den(1, 9);
        auto rnd = [&] {
            return Cyclo8(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                          make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
        };
        size_t cases = 10000;
        for (size_t i = 0; i < cases; ++i) {
            Cyclo8 a = rnd(), b = rnd(), c = rnd();
            if ((a + b) + c != a + (b + c)) return std::tuple{std::string("field axioms"),
                                                              std::string("associativity failed"),
                                                              false};
            if (a * (b + c) != a * b + a * c)
                return std::tuple{std::string("field axioms"),
                                  std::string("distributivity failed"), false};
            if ((a * b) * c != a * (b * c))
                return std::tuple{std::string("field axioms"),
                                  std::string("mul associativity failed"), false};
            if (!a.is_zero() && !(a * a.inv()).is_one())
                return std::tuple{std::string("field axioms"), std::string("inverse failed"),
                                  false};
            if (Cyclo8::parse(a.to_text()) != a || Cyclo8::parse(a.to_text()).to_text() != a.to_text())
                return std::tuple{std::string("field axioms"),
                                  std::string("canonical form not stable"), false};
        }
        return std::tuple{std::string("10000 randomized cases"), std::string("all passed"), true};
    });
    run.claim("c9.act_evaluate", 9, [&] {
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<int> small(-3, 3);
        std::uniform_int_distribution<int> expd(0, 3);
        // a random sparse polynomial in six variables
        SWEPoly f(6);
        for (int t = 0; t < 8; ++t) {
            ExpVec e(6);
            for (auto& x : e) x = static_cast<uint8_t>(expd(rng));
            f.add_term(e, Cyclo8(small(rng), small(rng), small(rng), small(rng)));
        }
        size_t points = 100;
        for (const CMatrix& g : hgens) {
            SWEPoly gf = act(g, f);
            for (size_t p = 0; p < points; ++p) {
                std::vector<Cyclo8> v(6);
                for (auto& x : v) x = Cyclo8(small(rng), small(rng), small(rng), small(rng));
                // evaluate(act(A,f), v) = evaluate(f, A*v)
                std::vector<Cyclo8> av(6);
                for (size_t i = 0; i < 6; ++i)
                    for (size_t j = 0; j < 6; ++j) av[i] += g.at(i, j) * v[j];
                if (evaluate(gf, v) != evaluate(f, av))
                    return std::tuple{std::string("compatible"),
                                      std::string("mismatch at a random point"), false};
            }
        }
        return std::tuple{std::string("6 generators x 100 points"), std::string("all compatible"),
                          true};
    });
    run.claim("c9.closure_determinism", 9, [&] {
        if (!H) H.emplace(close_group(hgens, copts));
        std::vector<std::string> ref_keys = H->element_keys();
        for (unsigned t : {1u, 2u}) {
            ClosureOptions o = copts;
            o.threads = t;
            GroupClosure again = close_group(hgens, o);
            if (again.order() != H->order() || again.element_keys() != ref_keys)
                return std::tuple{std::string("identical element sets"),
                                  "differs with threads=" + std::to_string(t), false};
        }
        return std::tuple{std::string("identical element sets for 1 and 2 workers"),
                          std::string("identical"), true};
    });
    run.claim("c9.phi_multiplicative", 9, [&] {
        for (size_t i = 0; i < ggens.size(); ++i)
            for (size_t j = 0; j < ggens.size(); ++j) {
                CMatrix lhs = symmetrize(ggens[i], spec) * symmetrize(ggens[j], spec);
                CMatrix rhs = symmetrize(ggens[i] * ggens[j], spec);
                if (lhs != rhs)
                    return std::tuple{std::string("phi(g1)phi(g2) = phi(g1 g2)"),
                                      "mismatch at pair (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")",
                                      false};
            }
        return std::tuple{std::string("all 36 generator pairs"), std::string("multiplicative"),
                          true};
    });

    return report;
}

} // namespace codent
