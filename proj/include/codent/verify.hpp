#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace codent {

struct VerifyOptions {
    bool skip_g = false;
    size_t deep_degree = 8;  // degree for the direct fixed-space computation
    size_t pairs_limit = 1u << 25;
    size_t closure_limit = 1u << 20;
    unsigned threads = 0;
    /// Comma-separated claim-id substrings; empty runs everything.
    std::string claims_filter;
    /// Code id (E8, Q8, K8, D16, K16) -> path of a replacement JSON fixture.
    std::map<std::string, std::string> code_overrides;

    static VerifyOptions from_config(const nlohmann::json& config);
};

struct Claim {
    std::string id;
    int criterion = 0;
    std::string expected;
    std::string computed;
    enum class Verdict { Pass, Fail, Skip } verdict = Verdict::Skip;
    double elapsed_ms = 0;
    long rss_kb = 0;
};

struct VerificationReport {
    std::vector<Claim> claims;

    bool overall_pass() const;
    size_t count(Claim::Verdict v) const;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

using ClaimCallback = std::function<void(const Claim&)>;

/// Recomputes every catalog claim in pipeline order; claims keep running
/// after failures so the report is complete.
VerificationReport run_verification(const VerifyOptions& options = {},
                                    const ClaimCallback& on_claim = nullptr);

} // namespace codent
