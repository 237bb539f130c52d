#include <algorithm>
#include <chrono>
#include <set>

#include "rkc/characters.hpp"
#include "rkc/cli.hpp"
#include "rkc/errors.hpp"
#include "rkc/genfunc.hpp"
#include "rkc/kronecker_tableaux.hpp"
#include "rkc/plane_partition.hpp"

namespace rkc::cli {

std::string to_string(Method m)
{
    switch (m) {
    case Method::series:
        return "series";
    case Method::tableaux:
        return "tableaux";
    case Method::planepartitions:
        return "planepartitions";
    case Method::oracle:
        return "oracle";
    case Method::all:
        return "all";
    }
    return "?";
}

Method parse_method(const std::string& s)
{
    for (Method m : {Method::series, Method::tableaux, Method::planepartitions, Method::oracle, Method::all})
        if (to_string(m) == s)
            return m;
    throw PreconditionError("unknown method '" + s + "'");
}

Json OutputRecord::to_json() const
{
    Json j;
    j["a"] = a;
    j["b"] = b;
    j["k"] = k;
    j["value"] = value.get_str();
    j["method"] = method;
    for (const auto& [key, v] : meta.items())
        j[key] = v;
    return j;
}

BigInt series_value(int a, int b, int k)
{
    return series_coefficients(gf_reduced(a, b), k)[static_cast<std::size_t>(k)];
}

BigInt two_row_plane_partition_count(int k)
{
    BigInt total = 0;
    for (int top = 0; top <= k; ++top)
        for (const auto& mu : partitions_of(top))
            total += static_cast<unsigned long>(partitions_of(k - top, mu).size());
    return total;
}

namespace {

void enumeration_guard(int a, int b, int k, const Guards& g, const char* what)
{
    if (g.unsafe)
        return;
    const BigInt expected = series_value(a, b, k);
    if (expected > static_cast<unsigned long>(g.enumeration_max))
        throw GuardError(std::string(what) + " would enumerate " + expected.get_str() + " objects (> guard " +
                         std::to_string(g.enumeration_max) + "); pass --unsafe to override");
}

OutputRecord run_series(int a, int b, int k)
{
    OutputRecord rec{a, b, k, series_value(a, b, k), "series", Json::object()};
    rec.meta["product_form"] = gf_reduced(a, b).to_string();
    if (a == b && a >= 1) {
        const long ell = lcm_up_to(a + 1);
        rec.meta["quasipolynomial_period"] = ell;
        rec.meta["quasipolynomial_branch"] = k % ell;
    }
    return rec;
}

OutputRecord run_tableaux(int a, int b, int k, const Guards& g)
{
    enumeration_guard(a, b, k, g, "tableaux");
    const int n = tableaux_evaluation_size(a, b, k);
    const Partition lambda = prepend_first_part(rectangle(k, a), n);
    const Partition nu = prepend_first_part(rectangle(k, b), n);
    OutputRecord rec{a, b, k, 0, "tableaux", Json::object()};
    Json breakdown = Json::array();
    for (const auto& [alpha, count] : two_row_breakdown(lambda, nu, k)) {
        rec.value += static_cast<unsigned long>(count);
        breakdown.push_back({{"alpha", alpha.to_string()}, {"count", count}});
    }
    rec.meta["n"] = n;
    rec.meta["lambda"] = lambda.to_string();
    rec.meta["nu"] = nu.to_string();
    rec.meta["alpha_breakdown"] = breakdown;
    return rec;
}

OutputRecord run_plane_partitions(int a, int b, int k, const Guards& g)
{
    if (a != b)
        throw PreconditionError("planepartitions applies only when a == b");
    enumeration_guard(a, b, k, g, "planepartitions");
    OutputRecord rec{a, b, k, count_plane_partitions_in_rect(k, 2, a), "planepartitions", Json::object()};
    rec.meta["rectangle"] = "2x" + std::to_string(a);
    return rec;
}

OutputRecord run_oracle(int a, int b, int k, const Guards& g)
{
    const Partition ra = rectangle(k, a), rb = rectangle(k, b), row = rectangle(k, 1);
    const int n = oracle_evaluation_size(ra, rb, row);
    const int limit = g.effective_oracle_max_n();
    if (n > limit)
        throw GuardError("oracle needs n=" + std::to_string(n) + " > guard " + std::to_string(limit) +
                         "; raise --max-oracle-n or pass --unsafe");
    OutputRecord rec{a, b, k, reduced_kronecker_oracle(ra, rb, row, limit), "oracle", Json::object()};
    rec.meta["n"] = n;
    rec.meta["stab3"] = stab3(ra, rb, row);
    return rec;
}

} // namespace

CoeffOutcome compute_coeff(int a, int b, int k, Method method, const Guards& guards)
{
    if (b < 0 || a < b || k < 0)
        throw PreconditionError("need a >= b >= 0 and k >= 0");
    CoeffOutcome out;
    switch (method) {
    case Method::series:
        out.records.push_back(run_series(a, b, k));
        return out;
    case Method::tableaux:
        out.records.push_back(run_tableaux(a, b, k, guards));
        return out;
    case Method::planepartitions:
        out.records.push_back(run_plane_partitions(a, b, k, guards));
        return out;
    case Method::oracle:
        out.records.push_back(run_oracle(a, b, k, guards));
        return out;
    case Method::all:
        break;
    }
    out.records.push_back(run_series(a, b, k));
    auto attempt = [&](const char* name, auto&& fn) {
        try {
            out.records.push_back(fn());
        } catch (const GuardError& e) {
            out.skipped.push_back(std::string(name) + ": " + e.what());
        } catch (const PreconditionError& e) {
            out.skipped.push_back(std::string(name) + ": " + e.what());
        }
    };
    attempt("tableaux", [&] { return run_tableaux(a, b, k, guards); });
    if (a == b)
        attempt("planepartitions", [&] { return run_plane_partitions(a, b, k, guards); });
    else
        out.skipped.push_back("planepartitions: applies only when a == b");
    attempt("oracle", [&] { return run_oracle(a, b, k, guards); });
    for (const auto& r : out.records)
        if (r.value != out.records.front().value)
            out.agree = false;
    return out;
}

bool VerificationReport::passed() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : cases)
        n += c.pass ? 0 : 1;
    return n;
}

Json VerificationReport::to_json() const
{
    Json j;
    j["suite"] = suite;
    j["params"] = params;
    j["passed"] = passed();
    j["cases_total"] = cases.size();
    j["cases_failed"] = failures();
    Json cs = Json::array();
    for (const auto& c : cases) {
        Json cj;
        cj["input"] = c.input;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["values"] = c.values;
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        cs.push_back(cj);
    }
    j["cases"] = cs;
    if (!notes.empty())
        j["notes"] = notes;
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

namespace {

class Stopwatch {
public:
    [[nodiscard]] double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json ranges_json(const VerifyRanges& r)
{
    return Json{{"max_a", r.max_a}, {"max_k", r.max_k}, {"max_s", r.max_s}};
}

// Series coefficients of F_{a,a} for k = 0..n.
std::vector<BigInt> diagonal_series(int a, int n) { return series_coefficients(gf_reduced(a, a), n); }

} // namespace

VerificationReport verify_saturation(const VerifyRanges& r)
{
    Stopwatch sw;
    VerificationReport rep{"saturation", ranges_json(r), {}, {}, 0};
    for (int a = 1; a <= r.max_a; ++a) {
        const auto series = diagonal_series(a, r.max_k * r.max_s);
        for (int k = 1; k <= r.max_k; ++k)
            for (int s = 1; s <= r.max_s; ++s) {
                CaseResult c;
                c.input = {{"a", a}, {"k", k}, {"s", s}};
                const BigInt& v = series[static_cast<std::size_t>(s * k)];
                c.values = {{"value", v.get_str()}};
                c.pass = v > 0;
                if (!c.pass)
                    c.witness = "gbar^(" + std::to_string(s * k) + ") is not positive";
                rep.cases.push_back(std::move(c));
            }
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

VerificationReport verify_monotone(const VerifyRanges& r)
{
    Stopwatch sw;
    VerificationReport rep{"monotone", ranges_json(r), {}, {}, 0};
    const int top_k = r.max_k * std::max(r.max_s, 1);
    std::vector<std::vector<BigInt>> table;
    for (int a = 1; a <= r.max_a; ++a)
        table.push_back(diagonal_series(a, top_k));
    auto seq_json = [](const std::vector<BigInt>& v) {
        Json j = Json::array();
        for (const auto& x : v)
            j.push_back(x.get_str());
        return j;
    };
    for (int a = 1; a <= r.max_a; ++a) {
        const auto& seq = table[static_cast<std::size_t>(a - 1)];
        CaseResult c;
        c.input = {{"direction", "k"}, {"a", a}, {"k_max", top_k}};
        c.values = {{"sequence", seq_json(seq)}};
        c.pass = true;
        for (std::size_t k = 1; k < seq.size() && c.pass; ++k)
            if (seq[k] < seq[k - 1]) {
                c.pass = false;
                c.witness = "drop at k=" + std::to_string(k);
            }
        rep.cases.push_back(std::move(c));
    }
    for (int k = 0; k <= top_k; ++k) {
        std::vector<BigInt> seq;
        for (int a = 1; a <= r.max_a; ++a)
            seq.push_back(table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k)]);
        CaseResult c;
        c.input = {{"direction", "a"}, {"k", k}, {"a_max", r.max_a}};
        c.values = {{"sequence", seq_json(seq)}};
        c.pass = true;
        for (std::size_t i = 1; i < seq.size() && c.pass; ++i)
            if (seq[i] < seq[i - 1]) {
                c.pass = false;
                c.witness = "drop at a=" + std::to_string(i + 1);
            }
        rep.cases.push_back(std::move(c));
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

VerificationReport verify_stabilize_in_a(const VerifyRanges& r)
{
    Stopwatch sw;
    VerificationReport rep{"stabilize-in-a", ranges_json(r), {}, {}, 0};
    for (int k = 0; k <= r.max_k; ++k) {
        const BigInt expected = two_row_plane_partition_count(k);
        CaseResult c;
        c.input = {{"k", k}, {"a_from", std::max(k, 1)}, {"a_to", std::max(k, 1) + 3}};
        Json vals = Json::array();
        c.pass = true;
        for (int a = std::max(k, 1); a <= std::max(k, 1) + 3; ++a) {
            const BigInt v = series_value(a, a, k);
            vals.push_back(v.get_str());
            if (v != expected && c.pass) {
                c.pass = false;
                c.witness = "a=" + std::to_string(a) + " gives " + v.get_str() + ", expected " + expected.get_str();
            }
        }
        c.values = {{"values", vals}, {"two_row_plane_partitions", expected.get_str()}};
        rep.cases.push_back(std::move(c));
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

VerificationReport verify_cross(const VerifyRanges& r, const Guards& g)
{
    Stopwatch sw;
    VerificationReport rep{"cross", ranges_json(r), {}, {}, 0};
    rep.params["oracle_max_n"] = g.effective_oracle_max_n() == INT_MAX ? -1 : g.effective_oracle_max_n();
    std::size_t oracle_runs = 0;
    for (int a = 0; a <= r.max_a; ++a)
        for (int b = 0; b <= a; ++b)
            for (int k = 0; k <= r.max_k; ++k) {
                CaseResult c;
                c.input = {{"a", a}, {"b", b}, {"k", k}};
                const auto outcome = compute_coeff(a, b, k, Method::all, g);
                for (const auto& rec : outcome.records) {
                    c.values[rec.method] = rec.value.get_str();
                    oracle_runs += rec.method == "oracle" ? 1 : 0;
                }
                c.pass = outcome.agree;
                if (!c.pass)
                    c.witness = "methods disagree";
                rep.cases.push_back(std::move(c));
            }
    rep.notes.push_back("oracle evaluated on " + std::to_string(oracle_runs) + " of " +
                        std::to_string(rep.cases.size()) + " cells (others exceed the oracle guard)");
    rep.wall_time_ms = sw.ms();
    return rep;
}

VerificationReport verify_reciprocity(const VerifyRanges& r)
{
    Stopwatch sw;
    VerificationReport rep{"reciprocity", ranges_json(r), {}, {}, 0};
    for (int a = 1; a <= r.max_a; ++a) {
        const auto rc = reciprocity_check(a);
        CaseResult c;
        c.input = {{"a", a}};
        c.values = {{"ell", rc.ell},
                    {"palindromic", rc.palindromic},
                    {"degree", rc.degree},
                    {"expected_degree", rc.expected_degree}};
        c.pass = rc.holds();
        if (!c.pass)
            c.witness = rc.palindromic ? "degree mismatch" : "P_a is not palindromic";
        rep.cases.push_back(std::move(c));
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

std::vector<VerificationReport> run_verify(const std::string& suite, const VerifyRanges& r, const Guards& g)
{
    static const std::set<std::string> known{"saturation", "monotone", "stabilize-in-a", "cross", "reciprocity", "all"};
    if (!known.contains(suite))
        throw PreconditionError("unknown verification suite '" + suite + "'");
    std::vector<VerificationReport> out;
    const bool all = suite == "all";
    if (all || suite == "saturation")
        out.push_back(verify_saturation(r));
    if (all || suite == "monotone")
        out.push_back(verify_monotone(r));
    if (all || suite == "stabilize-in-a")
        out.push_back(verify_stabilize_in_a(r));
    if (all || suite == "cross")
        out.push_back(verify_cross(r, g));
    if (all || suite == "reciprocity")
        out.push_back(verify_reciprocity(r));
    return out;
}

} // namespace rkc::cli
