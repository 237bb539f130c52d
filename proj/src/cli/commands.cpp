#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "rkc/bijection.hpp"
#include "rkc/characters.hpp"
#include "rkc/cli.hpp"
#include "rkc/cyclotomic.hpp"
#include "rkc/errors.hpp"
#include "rkc/genfunc.hpp"
#include "rkc/quasipolynomial.hpp"

namespace rkc::cli {

namespace {

struct Options {
    std::string format = "plain";
    Guards guards;
    long long max_enumeration = 10'000'000;

    int a = 0, b = 0, k = 0, n_terms = 10;
    std::string method = "series";
    int extra = -1;
    bool show = false;

    std::string suite = "all";
    VerifyRanges ranges;

    std::string alpha, beta, gamma, lambda, mu, nu;
    int from = -1, to = -1;
};

Format parse_format(const std::string& s)
{
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    return Format::plain;
}

Json envelope(const std::string& command, Json params)
{
    Json j;
    j["tool"] = tool_name;
    j["version"] = tool_version;
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = Json::array();
    return j;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string csv_row(const OutputRecord& r)
{
    return std::to_string(r.a) + "," + std::to_string(r.b) + "," + std::to_string(r.k) + "," + r.value.get_str() +
           "," + r.method;
}

int cmd_coeff(const Options& o, Format f, std::ostream& out, std::ostream& err)
{
    const Method m = parse_method(o.method);
    const auto res = compute_coeff(o.a, o.b, o.k, m, o.guards);
    for (const auto& s : res.skipped)
        err << "skipped " << s << '\n';
    if (!res.agree)
        err << "error: methods disagree\n";
    if (f == Format::json) {
        Json j = envelope("coeff", {{"a", o.a}, {"b", o.b}, {"k", o.k}, {"method", o.method}});
        for (const auto& r : res.records)
            j["results"].push_back(r.to_json());
        if (m == Method::all) {
            j["agree"] = res.agree;
            j["skipped"] = res.skipped;
        }
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "a,b,k,value,method\n";
        for (const auto& r : res.records)
            out << csv_row(r) << '\n';
    } else {
        for (const auto& r : res.records)
            out << "gbar^(" << r.k << ")_{(" << r.k << "^" << r.a << "),(" << r.k << "^" << r.b << ")} = " << r.value
                << "  [" << r.method << "]\n";
        if (m == Method::all)
            out << (res.agree ? "all methods agree" : "METHODS DISAGREE") << " (" << res.records.size()
                << " routes)\n";
    }
    return res.agree ? exit_ok : exit_verification_failed;
}

int cmd_series(const Options& o, Format f, std::ostream& out)
{
    if (o.b < 0 || o.a < o.b)
        throw PreconditionError("need a >= b >= 0");
    if (o.n_terms < 0)
        throw PreconditionError("need N >= 0");
    const ProductForm pf = gf_reduced(o.a, o.b);
    const auto coeffs = series_coefficients(pf, o.n_terms);
    if (f == Format::json) {
        Json j = envelope("series", {{"a", o.a}, {"b", o.b}, {"N", o.n_terms}});
        j["product_form"] = pf.to_string();
        for (int k = 0; k <= o.n_terms; ++k)
            j["results"].push_back(
                OutputRecord{o.a, o.b, k, coeffs[static_cast<std::size_t>(k)], "series", Json::object()}.to_json());
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "a,b,k,value,method\n";
        for (int k = 0; k <= o.n_terms; ++k)
            out << csv_row({o.a, o.b, k, coeffs[static_cast<std::size_t>(k)], "series", {}}) << '\n';
    } else {
        out << "F_{" << o.a << "," << o.b << "}(x) = " << pf.to_string() << '\n';
        for (int k = 0; k <= o.n_terms; ++k)
            out << (k ? "," : "") << coeffs[static_cast<std::size_t>(k)];
        out << '\n';
    }
    return exit_ok;
}

std::string rational_list(const std::vector<Rational>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v[i].get_str();
    return s;
}

int cmd_quasipoly(const Options& o, Format f, std::ostream& out)
{
    if (o.a < 1)
        throw PreconditionError("quasipoly needs a >= 1");
    if (o.a > o.guards.quasipoly_max_a && !o.guards.unsafe)
        throw GuardError("quasipoly a=" + std::to_string(o.a) + " exceeds guard " +
                         std::to_string(o.guards.quasipoly_max_a) + "; pass --unsafe to override");
    const int extra = o.extra >= 0 ? o.extra : default_validate_extra(o.a);
    const auto qr = extract_quasipolynomial(o.a, extra);
    const auto fac = cyclotomic_factorization(compute_Pa(o.a));
    const auto rec = reciprocity_check(o.a);
    const std::string fac_line = "P_" + std::to_string(o.a) + " = " + fac.to_string();
    const long period = qr.qp.period();

    if (f == Format::json) {
        Json j = envelope("quasipoly", {{"a", o.a}, {"validate_extra", extra}});
        for (long r = 0; r < period; ++r) {
            Json coeffs = Json::array();
            for (const auto& c : qr.qp.branch(r))
                coeffs.push_back(c.get_str());
            j["results"].push_back(
                {{"residue", r}, {"coefficients", coeffs}, {"polynomial", qr.qp.branch_to_string(r)}});
        }
        j["period"] = period;
        j["minimal_period"] = qr.minimal_period;
        j["degree"] = qr.qp.degree();
        j["terms_checked"] = qr.terms_checked;
        j["factorization"] = fac_line;
        j["Pa_degree"] = rec.degree;
        j["expected_Pa_degree"] = rec.expected_degree;
        j["palindromic"] = rec.palindromic;
        j["reciprocity"] = rec.holds();
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "residue,coefficients_low_to_high\n";
        for (long r = 0; r < period; ++r)
            out << r << "," << rational_list(qr.qp.branch(r)) << '\n';
    } else {
        for (long r = 0; r < period; ++r)
            out << "k = " << r << " mod " << period << ": " << qr.qp.branch_to_string(r) << '\n';
        out << "period " << period << ", minimal period " << qr.minimal_period << ", degree " << qr.qp.degree()
            << ", checked on " << qr.terms_checked << " terms\n";
        out << fac_line << '\n';
        out << "deg P_" << o.a << " = " << rec.degree << " (expected " << rec.expected_degree << "), palindromic "
            << (rec.palindromic ? "yes" : "no") << ", reciprocity " << (rec.holds() ? "holds" : "FAILS") << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Options& o, Format f, std::ostream& out)
{
    if (o.ranges.max_a < 0 || o.ranges.max_k < 0 || o.ranges.max_s < 1)
        throw PreconditionError("need max-a >= 0, max-k >= 0, max-s >= 1");
    const auto reports = run_verify(o.suite, o.ranges, o.guards);
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (f == Format::json) {
        Json j = envelope("verify", {{"suite", o.suite},
                                      {"max_a", o.ranges.max_a},
                                      {"max_k", o.ranges.max_k},
                                      {"max_s", o.ranges.max_s}});
        for (const auto& r : reports)
            j["results"].push_back(r.to_json());
        j["passed"] = ok;
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "suite,input,status,values,witness\n";
        for (const auto& r : reports)
            for (const auto& c : r.cases) {
                auto quote = [](const std::string& s) {
                    std::string q = "\"";
                    for (char ch : s)
                        q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                    return q + "\"";
                };
                out << r.suite << "," << quote(c.input.dump()) << "," << (c.pass ? "pass" : "fail") << ","
                    << quote(c.values.dump()) << "," << quote(c.witness) << '\n';
            }
    } else {
        for (const auto& r : reports) {
            out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases.size() << " cases, "
                << r.failures() << " failed)\n";
            for (const auto& c : r.cases)
                if (!c.pass)
                    out << "  fail " << c.input.dump() << " " << c.values.dump() << " " << c.witness << '\n';
            for (const auto& n : r.notes)
                out << "  note: " << n << '\n';
        }
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_oracle(const Options& o, Format f, std::ostream& out)
{
    const int limit = o.guards.effective_oracle_max_n();
    const bool direct = !o.lambda.empty() || !o.mu.empty() || !o.nu.empty();
    if (direct) {
        if (o.lambda.empty() || o.mu.empty() || o.nu.empty())
            throw PreconditionError("--lambda, --mu and --nu go together");
        const Partition l = parse_partition(o.lambda), m = parse_partition(o.mu), n = parse_partition(o.nu);
        const BigInt v = kronecker_coeff(l, m, n, limit);
        if (f == Format::json) {
            Json j = envelope("oracle", {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"nu", n.to_string()}});
            j["results"].push_back({{"n", l.size()}, {"value", v.get_str()}});
            print_json(out, j);
        } else if (f == Format::csv) {
            out << "lambda,mu,nu,value\n\"" << l.to_string() << "\",\"" << m.to_string() << "\",\"" << n.to_string()
                << "\"," << v << '\n';
        } else {
            out << "g_{" << l.to_string() << "," << m.to_string() << "}^" << n.to_string() << " = " << v << '\n';
        }
        return exit_ok;
    }
    if (o.alpha.empty() || o.beta.empty() || o.gamma.empty())
        throw PreconditionError("oracle needs --alpha/--beta/--gamma or --lambda/--mu/--nu");
    const Partition al = parse_partition(o.alpha), be = parse_partition(o.beta), ga = parse_partition(o.gamma);
    const int lowest = std::max({min_prepend_size(al), min_prepend_size(be), min_prepend_size(ga)});
    const int from = o.from >= 0 ? o.from : lowest;
    const int to = o.to >= 0 ? o.to : from + 3;
    if (from < lowest)
        throw PreconditionError("n must be at least " + std::to_string(lowest) + " for the padded shapes");
    if (to < from)
        throw PreconditionError("need --to >= --from");
    if (to > limit)
        throw GuardError("oracle range reaches n=" + std::to_string(to) + " > guard " + std::to_string(limit) +
                         "; raise --max-oracle-n or pass --unsafe");
    const auto seq = stable_sequence(al, be, ga, from, to, limit);
    const int s3 = stab3(al, be, ga);
    if (f == Format::json) {
        Json j = envelope("oracle", {{"alpha", al.to_string()},
                                      {"beta", be.to_string()},
                                      {"gamma", ga.to_string()},
                                      {"from", from},
                                      {"to", to}});
        j["stab3"] = s3;
        for (int n = from; n <= to; ++n)
            j["results"].push_back({{"n", n},
                                    {"value", seq[static_cast<std::size_t>(n - from)].get_str()},
                                    {"at_or_past_stab3", n >= s3}});
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "n,value,at_or_past_stab3\n";
        for (int n = from; n <= to; ++n)
            out << n << "," << seq[static_cast<std::size_t>(n - from)] << "," << (n >= s3 ? 1 : 0) << '\n';
    } else {
        out << "g_{" << al.to_string() << "[n]," << be.to_string() << "[n]}^" << ga.to_string()
            << "[n], stab3 = " << s3 << '\n';
        for (int n = from; n <= to; ++n)
            out << "n=" << n << "  " << seq[static_cast<std::size_t>(n - from)] << (n >= s3 ? "  (stable)" : "")
                << '\n';
    }
    return exit_ok;
}

int cmd_tableaux(const Options& o, Format f, std::ostream& out, std::ostream& err)
{
    if (o.a < 1 || o.k < 0)
        throw PreconditionError("tableaux needs a >= 1 and k >= 0");
    const BigInt expected = series_value(o.a, o.a, o.k);
    if (!o.guards.unsafe && expected > static_cast<unsigned long>(o.guards.enumeration_max))
        throw GuardError("tableaux would list " + expected.get_str() + " records; pass --unsafe to override");
    const Partition lambda = bijection_shape(o.a, o.k);
    Json results = Json::array();
    std::ostringstream plain;
    bool ok = true;
    std::size_t count = 0;
    for (const auto& beta : colored_partitions_of(o.k, o.a)) {
        const auto res = colored_to_tableau(beta, o.k);
        bool round_trip = is_kronecker_tableau(res.tableau.tableau, lambda);
        if (round_trip) {
            try {
                round_trip = tableau_to_colored(res.tableau, o.a) == beta;
            } catch (const NotInImageError& e) {
                err << e.what() << '\n';
                round_trip = false;
            }
        }
        ok = ok && round_trip;
        ++count;
        Json r{{"a", o.a}, {"k", o.k}, {"beta", beta.to_string()}, {"alpha", res.alpha.to_string()},
               {"round_trip", round_trip}};
        if (o.show)
            r["rendering"] = render_ascii(res.tableau.tableau);
        results.push_back(r);
        plain << "beta=" << beta.to_string() << "  alpha=" << res.alpha.to_string()
              << (round_trip ? "" : "  ROUND TRIP FAILED") << '\n';
        if (o.show)
            plain << render_ascii(res.tableau.tableau) << '\n';
    }
    const bool count_ok = expected == static_cast<unsigned long>(count);
    ok = ok && count_ok;
    if (f == Format::json) {
        Json j = envelope("tableaux", {{"a", o.a}, {"k", o.k}, {"show", o.show}});
        j["results"] = results;
        j["count"] = count;
        j["series_value"] = expected.get_str();
        print_json(out, j);
    } else if (f == Format::csv) {
        out << "a,k,beta,alpha,round_trip\n";
        for (const auto& r : results)
            out << o.a << "," << o.k << ",\"" << r["beta"].get<std::string>() << "\",\""
                << r["alpha"].get<std::string>() << "\"," << (r["round_trip"].get<bool>() ? 1 : 0) << '\n';
    } else {
        out << "shape " << lambda.to_string() << ", " << count << " colored partitions of " << o.k << " (series value "
            << expected << ")\n"
            << plain.str();
    }
    if (!count_ok)
        err << "error: record count differs from the series value\n";
    return ok ? exit_ok : exit_verification_failed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Reduced Kronecker coefficients gbar^(k)_{(k^a),(k^b)}", tool_name};
    app.set_version_flag("--version", tool_version);
    app.set_config("--config", "", "key=value file with default option values");
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_flag("--unsafe", o.guards.unsafe, "Lift every guard");
    app.add_option("--max-oracle-n", o.guards.oracle_max_n, "Largest n the character oracle may use")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-quasipoly-a", o.guards.quasipoly_max_a, "Largest a for quasipoly")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-enumeration", o.max_enumeration, "Largest enumeration size")->check(CLI::PositiveNumber);

    auto* coeff = app.add_subcommand("coeff", "One coefficient by one or all methods");
    coeff->add_option("-a", o.a, "a")->required();
    coeff->add_option("-b", o.b, "b")->required();
    coeff->add_option("-k", o.k, "k")->required();
    coeff->add_option("--method", o.method, "Computation route")
        ->check(CLI::IsMember({"series", "tableaux", "planepartitions", "oracle", "all"}));

    auto* series = app.add_subcommand("series", "First N+1 coefficients of F_{a,b}");
    series->add_option("-a", o.a, "a")->required();
    series->add_option("-b", o.b, "b")->required();
    series->add_option("-N", o.n_terms, "Highest power of x");

    auto* quasi = app.add_subcommand("quasipoly", "Quasipolynomial branches of F_{a,a}");
    quasi->add_option("-a", o.a, "a")->required();
    quasi->add_option("--extra", o.extra, "Extra series terms used for validation");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", o.suite, "Suite name")
        ->check(CLI::IsMember({"saturation", "monotone", "stabilize-in-a", "cross", "reciprocity", "all"}));
    verify->add_option("--max-a", o.ranges.max_a, "Largest a");
    verify->add_option("--max-k", o.ranges.max_k, "Largest k");
    verify->add_option("--max-s", o.ranges.max_s, "Largest dilation factor");

    auto* oracle = app.add_subcommand("oracle", "Kronecker coefficients from characters");
    oracle->add_option("--alpha", o.alpha, "alpha, e.g. 3,2");
    oracle->add_option("--beta", o.beta, "beta");
    oracle->add_option("--gamma", o.gamma, "gamma");
    oracle->add_option("--from", o.from, "First n");
    oracle->add_option("--to", o.to, "Last n");
    oracle->add_option("--lambda", o.lambda, "lambda (single coefficient)");
    oracle->add_option("--mu", o.mu, "mu");
    oracle->add_option("--nu", o.nu, "nu");

    auto* tab = app.add_subcommand("tableaux", "Colored partitions and their Kronecker tableaux");
    tab->add_option("-a", o.a, "a")->required();
    tab->add_option("-k", o.k, "k")->required();
    tab->add_flag("--show", o.show, "Draw each tableau");

    for (auto* sub : {coeff, series, quasi, verify, oracle, tab})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    o.guards.enumeration_max = static_cast<std::uint64_t>(o.max_enumeration);
    const Format f = parse_format(o.format);

    try {
        if (coeff->parsed())
            return cmd_coeff(o, f, out, err);
        if (series->parsed())
            return cmd_series(o, f, out);
        if (quasi->parsed())
            return cmd_quasipoly(o, f, out);
        if (verify->parsed())
            return cmd_verify(o, f, out);
        if (oracle->parsed())
            return cmd_oracle(o, f, out);
        if (tab->parsed())
            return cmd_tableaux(o, f, out, err);
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return exit_verification_failed;
    }
    return exit_usage;
}

} // namespace rkc::cli
