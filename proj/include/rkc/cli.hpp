#ifndef RKC_CLI_HPP
#define RKC_CLI_HPP

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rkc/characters.hpp"
#include "rkc/integer.hpp"

namespace rkc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_name = "rkc";
inline constexpr const char* tool_version = "0.1.0";

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

enum class Format { plain, csv, json };
enum class Method { series, tableaux, planepartitions, oracle, all };

std::string to_string(Method m);
Method parse_method(const std::string& s);

struct Guards {
    int oracle_max_n = default_oracle_max_n;
    int quasipoly_max_a = 6;
    std::uint64_t enumeration_max = 10'000'000;
    bool unsafe = false;

    [[nodiscard]] int effective_oracle_max_n() const noexcept { return unsafe ? INT_MAX : oracle_max_n; }
};

// One computed value. `value` is rendered as a decimal string in JSON.
struct OutputRecord {
    int a = 0;
    int b = 0;
    int k = 0;
    BigInt value;
    std::string method;
    Json meta = Json::object();

    [[nodiscard]] Json to_json() const;
};

struct CoeffOutcome {
    std::vector<OutputRecord> records;
    std::vector<std::string> skipped; // "method: reason"
    bool agree = true;
};

// gbar^{(k)}_{(k^a),(k^b)} via the selected route(s). `all` runs every
// applicable route and sets agree = false on any disagreement. Throws
// GuardError / PreconditionError when a single requested route cannot run.
CoeffOutcome compute_coeff(int a, int b, int k, Method method, const Guards& guards);

// Series coefficient of gf_reduced(a, b) at x^k.
BigInt series_value(int a, int b, int k);

// Plane partitions of k with at most two rows, counted as pairs mu ⊇ nu of
// ordinary partitions with |mu| + |nu| = k.
BigInt two_row_plane_partition_count(int k);

struct CaseResult {
    Json input = Json::object();
    bool pass = false;
    Json values = Json::object();
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    Json params = Json::object();
    std::vector<CaseResult> cases;
    std::vector<std::string> notes;
    double wall_time_ms = 0; // the only non-deterministic field

    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::size_t failures() const noexcept;
    [[nodiscard]] Json to_json() const;
};

struct VerifyRanges {
    int max_a = 4;
    int max_k = 6;
    int max_s = 3;
};

// gbar^{(sk)}_{((sk)^a),((sk)^a)} > 0 for 1 <= a <= max_a, 1 <= k <= max_k, 1 <= s <= max_s.
VerificationReport verify_saturation(const VerifyRanges& r);
// Weakly increasing in k (0..max_k*max_s) for each a, and in a (1..max_a) for each k.
VerificationReport verify_monotone(const VerifyRanges& r);
// For k <= max_k, the value is the same for a = k..k+3 and equals the number
// of plane partitions of k with at most two rows.
VerificationReport verify_stabilize_in_a(const VerifyRanges& r);
// All routes agree on a <= max_a, b <= a, k <= max_k (oracle only where the guard allows).
VerificationReport verify_cross(const VerifyRanges& r, const Guards& g);
// Palindromic P_a with the predicted degree, for 1 <= a <= max_a.
VerificationReport verify_reciprocity(const VerifyRanges& r);

std::vector<VerificationReport> run_verify(const std::string& suite, const VerifyRanges& r, const Guards& g);

// Full command-line entry point. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rkc::cli

#endif
