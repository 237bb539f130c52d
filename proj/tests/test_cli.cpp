#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "rkc/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "rkc");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = rkc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

rkc::cli::Json strip_times(rkc::cli::Json j)
{
    for (auto& r : j["results"])
        r.erase("wall_time_ms");
    return j;
}

} // namespace

TEST_CASE("coeff examples")
{
    auto r = cli({"--format", "json", "coeff", "-a", "4", "-b", "4", "-k", "3", "--method", "all"});
    CHECK(r.code == 0);
    auto j = rkc::cli::Json::parse(r.out);
    CHECK(j["tool"] == "rkc");
    CHECK(j["command"] == "coeff");
    CHECK(j["agree"] == true);
    CHECK(j["results"].size() == 3); // oracle is over the default guard
    for (const auto& rec : j["results"])
        CHECK(rec["value"] == "5");

    r = cli({"--max-oracle-n", "21", "--format", "json", "coeff", "-a", "4", "-b", "4", "-k", "3", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(rkc::cli::Json::parse(r.out)["results"].size() == 4);

    r = cli({"--format", "csv", "coeff", "-a", "3", "-b", "2", "-k", "7"});
    CHECK(r.out == "a,b,k,value,method\n3,2,7,1,series\n");
    r = cli({"--format", "csv", "coeff", "-a", "5", "-b", "2", "-k", "1"});
    CHECK(r.out == "a,b,k,value,method\n5,2,1,0,series\n");
}

TEST_CASE("series output")
{
    auto r = cli({"series", "-a", "2", "-b", "2", "-N", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "F_{2,2}(x) = 1/((1-x)(1-x^2)^2(1-x^3))\n1,1,3,4,7,9,14\n");
    r = cli({"series", "-a", "1", "-b", "0", "-N", "3"});
    CHECK(r.out.find("1,1,1,1\n") != std::string::npos);
    r = cli({"--format", "json", "series", "-a", "4", "-b", "4", "-N", "3"});
    CHECK(rkc::cli::Json::parse(r.out)["results"][3]["value"] == "5");
}

TEST_CASE("quasipoly output")
{
    auto r = cli({"quasipoly", "-a", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("k = 1 mod 6: 1/72 k^3 + 1/6 k^2 + 13/24 k + 5/18") != std::string::npos);
    CHECK(r.out.find("P_2 = Φ2^2 · Φ3^3 · Φ6^4") != std::string::npos);
    r = cli({"--format", "json", "quasipoly", "-a", "1"});
    auto j = rkc::cli::Json::parse(r.out);
    CHECK(j["results"].size() == 2);
    CHECK(j["degree"] == 1);
    CHECK(cli({"quasipoly", "-a", "7"}).code == 2);
}

TEST_CASE("oracle output")
{
    auto r = cli({"--format", "csv", "oracle", "--alpha", "3,2", "--beta", "4,2", "--gamma", "2,2,1", "--from", "10",
                  "--to", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value,at_or_past_stab3\n10,18,0\n11,35,0\n12,40,0\n13,40,0\n");
    for (int n = 2; n <= 4; ++n) {
        const std::string p = std::to_string(n) + "," + std::to_string(n);
        r = cli({"--format", "json", "oracle", "--lambda", p, "--mu", p, "--nu", p});
        CHECK(rkc::cli::Json::parse(r.out)["results"][0]["value"] == (n % 2 ? "0" : "1"));
    }
    CHECK(cli({"oracle", "--alpha", "1", "--beta", "1", "--gamma", "1", "--to", "30"}).code == 2);
}

TEST_CASE("tableaux listing")
{
    auto r = cli({"--format", "json", "tableaux", "-a", "4", "-k", "3"});
    CHECK(r.code == 0);
    CHECK(rkc::cli::Json::parse(r.out)["results"].size() == 5);
    r = cli({"--format", "json", "tableaux", "-a", "2", "-k", "0"});
    CHECK(rkc::cli::Json::parse(r.out)["results"].size() == 1);
    r = cli({"tableaux", "-a", "3", "-k", "3", "--show"});
    CHECK(r.out.find("* * 1 1 1 1 1 2 3\n* 1 2\n1 3 3\n4 4 4\n") != std::string::npos);
}

TEST_CASE("verify suites and determinism")
{
    const std::vector<std::string> args{"--format", "json", "verify", "all", "--max-a", "3", "--max-k", "4"};
    auto r1 = cli(args), r2 = cli(args);
    CHECK(r1.code == 0);
    CHECK(strip_times(rkc::cli::Json::parse(r1.out)).dump() == strip_times(rkc::cli::Json::parse(r2.out)).dump());
    auto r = cli({"--format", "json", "verify", "stabilize-in-a", "--max-k", "3"});
    auto j = rkc::cli::Json::parse(r.out);
    CHECK(j["results"][0]["cases"][3]["values"]["values"] == rkc::cli::Json{"5", "5", "5", "5"});
}

TEST_CASE("exit codes")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"coeff", "-a", "1"}).code == 2);
    CHECK(cli({"coeff", "-a", "1", "-b", "2", "-k", "1"}).code == 2);
    CHECK(cli({"coeff", "-a", "4", "-b", "4", "-k", "3", "--method", "oracle"}).code == 2);
    CHECK(cli({"coeff", "-a", "2", "-b", "1", "-k", "3", "--method", "planepartitions"}).code == 2);
    CHECK(cli({"coeff", "-a", "4", "-b", "4", "-k", "3", "--method", "nope"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"--max-enumeration", "3", "coeff", "-a", "4", "-b", "4", "-k", "3", "--method", "tableaux"}).code == 2);
    CHECK(cli({"--max-enumeration", "3", "--unsafe", "coeff", "-a", "4", "-b", "4", "-k", "3", "--method",
               "tableaux"})
              .code == 0);
}
