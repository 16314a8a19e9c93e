#include "springer/cli.hpp"
#include "springer/correspondence.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using springer::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("table as csv")
{
    const auto r = invoke({"table", "--n", "5", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "pair,series,mu");
    const auto golden = springer::parse_fixture(springer::appendix_fixture(5));
    for (const auto& g : golden) {
        const std::string expected = csv_field(springer::format_label(g.pair)) + "," +
                                     csv_field(springer::format_datum(g.series)) + "," +
                                     csv_field(springer::format_partition(g.mu));
        CHECK(std::count(rows.begin(), rows.end(), expected) == 1);
    }
}

TEST_CASE("support as json")
{
    const auto r = invoke({"--format", "json", "support", "--label", "[4,2,1];--+"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "support");
    CHECK(j["inputs"]["label"] == "[4,2,1];--+");
    REQUIRE(j["results"].size() == 1);
    const auto& row = j["results"][0];
    CHECK(row["series"]["N0"] == 5);
    CHECK(row["series"]["nu"]["lambda"] == nlohmann::json({2, 2, 1}));
    CHECK(row["series"]["sigma"] == nlohmann::json({-1, 1}));
    CHECK(row["mu"] == nlohmann::json({1}));
    CHECK(row["cuspidal"] == false);

    const auto t = invoke({"support", "--label", "[4,2,1];--+"});
    CHECK(t.out == "series: N0=5 nu=[2,2,1] sigma=-+\nmu: [1]\n");
}

TEST_CASE("verify-appendix")
{
    const auto r = invoke({"verify-appendix"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6/6 tables match") != std::string::npos);
    const auto j = nlohmann::json::parse(invoke({"verify-appendix", "--format", "json"}).out);
    CHECK(j["results"].size() == 6);
    for (const auto& row : j["results"])
        CHECK(row["match"] == true);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"table"}).code == 2);
    CHECK(invoke({"table", "--n", "x"}).code == 2);
    CHECK(invoke({"table", "--n", "4", "--format", "xml"}).code == 2);
    const auto bad = invoke({"support", "--label", "[3,1];--"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(invoke({"support", "--label", "[3,1"}).code == 2);
    CHECK(invoke({"correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[2]", "--n", "4"})
              .code == 2);
    CHECK(invoke({"table", "--n", "-1"}).code == 2);
    CHECK(invoke({"table", "--n", "4", "orbits", "--n", "4"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("byte stability")
{
    const std::vector<std::vector<std::string>> cmds{
        {"pairs", "--n", "6", "--format", "json"},
        {"bw-sweep", "--trials", "200", "--max-n", "6", "--seed", "4"},
        {"oracle-check", "--max-n", "4", "--seed", "2", "--trials", "5", "--format", "csv"},
    };
    for (const auto& c : cmds) {
        const auto a = invoke(c);
        const auto b = invoke(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find('\r') == std::string::npos);
    }
}

TEST_CASE("every command runs")
{
    const std::vector<std::vector<std::string>> cmds{
        {"partitions", "--n", "5"},
        {"dominance", "--mu", "[2,2]", "--lambda", "[3,1]"},
        {"orbits", "--n", "4"},
        {"pairs", "--n", "4"},
        {"cuspidal", "--n", "6"},
        {"series", "--n", "5"},
        {"table", "--n", "3"},
        {"support", "--label", "[5];+"},
        {"correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[2]"},
        {"restrict", "--from", "[5];+", "--to", "[3];+"},
        {"branching", "--max-n", "6"},
        {"dims", "--orbit", "[3,2]", "--levi-orbit", "[1]"},
        {"bw-sweep", "--trials", "100", "--max-n", "5", "--seed", "1"},
        {"count", "--max-n", "12"},
        {"verify-appendix"},
        {"oracle-check", "--max-n", "3", "--seed", "1", "--trials", "3"},
    };
    for (const auto& c : cmds)
        for (const char* fmt : {"text", "json", "csv"}) {
            auto args = c;
            args.push_back("--format");
            args.push_back(fmt);
            CAPTURE(c.front());
            CAPTURE(fmt);
            const auto r = invoke(args);
            CHECK(r.code == 0);
            CHECK_FALSE(r.out.empty());
            if (std::string(fmt) == "json")
                CHECK(nlohmann::json::accept(r.out));
        }
}

TEST_CASE("command results")
{
    auto j = nlohmann::json::parse(invoke({"cuspidal", "--n", "7", "--format", "json"}).out);
    CHECK(j["results"].size() == 16);
    j = nlohmann::json::parse(invoke({"count", "--max-n", "24", "--format", "json"}).out);
    CHECK(j["results"].size() == 25);
    j = nlohmann::json::parse(
        invoke({"correspond", "--series", "N0=1 nu=[1] sigma=+", "--mu", "[2,1]", "--format",
                "json"})
            .out);
    CHECK(j["results"][0]["gamma"]["lambda"] == nlohmann::json({5, 2}));
    CHECK(j["results"][0]["gamma"]["tau"] == nlohmann::json({1, 1}));
    const auto r = invoke({"dominance", "--mu", "[3,1,1,1]", "--lambda", "[2,2,2]"});
    CHECK(r.code == 0);
}
