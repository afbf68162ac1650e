// Acceptance suite: recomputes every catalog claim end to end and prints one
// verdict line per criterion.  Exit code 0 iff everything passes.

#include <iostream>
#include <map>

#include "codent/util.hpp"
#include "codent/verify.hpp"

using namespace codent;

namespace {

const std::map<int, const char*> kCriteria = {
    {1, "generator fidelity (reference matrices, exact)"},
    {2, "group orders 294912 / 589824"},
    {3, "code certification (sizes, self-dual, Type II)"},
    {4, "degree-8 enumerators equal the reference polynomials"},
    {5, "invariance of all eight enumerators under the six generators"},
    {6, "independence determinants nonzero"},
    {7, "dimension series matches the closed form"},
    {8, "cross-validation (fixed spaces, mass, multiplicativity)"},
    {9, "property suites (axioms, compatibility, determinism)"},
};

} // namespace

int main(int argc, char** argv) {
    VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--skip-G") opts.skip_g = true;
        if (arg == "--threads" && i + 1 < argc) opts.threads = std::stoul(argv[++i]);
    }

    Stopwatch total;
    VerificationReport report = run_verification(opts, [](const Claim& c) {
        const char* v = c.verdict == Claim::Verdict::Pass   ? "pass"
                        : c.verdict == Claim::Verdict::Fail ? "FAIL"
                                                            : "skip";
        std::cout << "  [" << v << "] " << c.id << " expected=" << c.expected
                  << " computed=" << c.computed << " (" << static_cast<long>(c.elapsed_ms)
                  << " ms)" << std::endl;
    });

    std::cout << "\n";
    bool all_pass = true;
    for (const auto& [criterion, label] : kCriteria) {
        size_t pass = 0, fail = 0, skip = 0;
        for (const auto& c : report.claims) {
            if (c.criterion != criterion) continue;
            if (c.verdict == Claim::Verdict::Pass) ++pass;
            if (c.verdict == Claim::Verdict::Fail) ++fail;
            if (c.verdict == Claim::Verdict::Skip) ++skip;
        }
        const char* verdict = fail ? "FAIL" : "PASS";
        if (fail) all_pass = false;
        std::cout << "criterion " << criterion << ": " << verdict << "  (" << pass << " pass, "
                  << fail << " fail, " << skip << " skip)  " << label << "\n";
    }
    std::cout << "acceptance: " << (all_pass ? "PASS" : "FAIL") << " in "
              << static_cast<long>(total.elapsed_ms() / 1000) << " s, peak rss "
              << peak_rss_kb() / 1024 << " MB\n";
    return all_pass ? 0 : 1;
}
