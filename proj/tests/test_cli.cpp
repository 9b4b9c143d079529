#include "dictpin/cli.hpp"
#include "dictpin/scenario.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dictpin");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dictpin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int exit_status(const std::string& command)
{
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Fixtures {
    fs::path dir = fs::temp_directory_path() / ("dictpin_cli_" + std::to_string(::getpid()));
    Fixtures()
    {
        fs::create_directories(dir);
        std::ofstream(dir / "one.tsv") << "that\t5\n";
        std::ofstream(dir / "small.tsv") << "that\t30\nwhat\t20\nthis\t15\nhave\t12\nyour\t9\nknow\t8\nthere\t25\n";
        std::ofstream(dir / "three.tsv") << "that\t3\nwhat\t2\nthere\t2\n";
        std::ofstream(dir / "empty.tsv") << "";
    }
    ~Fixtures() { fs::remove_all(dir); }
    std::string operator/(const char* name) const { return (dir / name).string(); }
};

const std::string subtlexus = DICTPIN_FIXTURE_DIR "/subtlexus.tsv";

}  // namespace

TEST_CASE("analyze renders the reference row")
{
    const auto r = run({"analyze", "--dict", subtlexus, "--pin-length", "4", "--strategy", "basic", "--mapping",
                        "standard"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("summary  7.23 / 7.18 / 5.58 / 23.93") != std::string::npos);
    CHECK(r.out.find("8428") != std::string::npos);
}

TEST_CASE("analyze morph on a one-word corpus")
{
    Fixtures fx;
    const auto r = run({"analyze", "--dict", fx / "one.tsv", "--pin-length", "4", "--strategy", "basic", "--morph"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line))
        if (line.find("8428") != std::string::npos && line.find("0.1000") != std::string::npos)
            found = line.find("10.00") != std::string::npos;
    CHECK(found);
}

TEST_CASE("exit codes")
{
    Fixtures fx;
    SUBCASE("missing file names the path")
    {
        const auto r = run({"analyze", "--dict", fx / "nope.tsv"});
        CHECK(r.code == 1);
        CHECK(r.err.find("nope.tsv") != std::string::npos);
    }
    CHECK(run({"analyze", "--dict", fx / "small.tsv", "--strategy", "suffix"}).code == 2);
    CHECK(run({"analyze", "--dict", fx / "small.tsv", "--pin-length", "x"}).code == 2);
    CHECK(run({"analyze", "--dict", fx / "small.tsv", "--output", "xml"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"analyze", "--dict", "a", "--dict", "b", "--dict", "c"}).code == 2);
    CHECK(run({"analyze", "--dict", fx / "small.tsv", "--pin-length", "8"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    SUBCASE("subprocess")
    {
        const std::string tool = DICTPIN_TOOL;
        CHECK(exit_status(tool + " analyze --dict " + (fx / "small.tsv")) == 0);
        CHECK(exit_status(tool + " analyze --dict " + (fx / "nope.tsv")) == 1);
        CHECK(exit_status(tool + " analyze --dict " + (fx / "small.tsv") + " --bogus") == 2);
        CHECK(exit_status(tool + " inspect --dict " + (fx / "empty.tsv")) == 1);
    }
}

TEST_CASE("config file merges with command-line precedence")
{
    Fixtures fx;
    const auto cfg = fx.dir / "scenario.conf";
    std::ofstream(cfg) << "dict = " << (fx / "small.tsv") << "\npin-length = 5\nmin-count = 0\nstrategy = prefix\n";
    const auto from_file = run({"analyze", "--config", cfg.string(), "--output", "json"});
    REQUIRE(from_file.code == 0);
    CHECK(nlohmann::json::parse(from_file.out)[0]["scenario"] == "small n=5 standard prefix");

    const auto overridden = run({"analyze", "--config", cfg.string(), "--pin-length", "4", "--output", "json"});
    REQUIRE(overridden.code == 0);
    CHECK(nlohmann::json::parse(overridden.out)[0]["scenario"] == "small n=4 standard prefix");

    std::ofstream(fx.dir / "bad.conf") << "colour = blue\n";
    CHECK(run({"analyze", "--config", (fx.dir / "bad.conf").string(), "--dict", fx / "small.tsv"}).code == 2);
}

TEST_CASE("JSON output round-trips the in-memory record")
{
    Fixtures fx;
    const auto r = run({"analyze", "--dict", fx / "small.tsv", "--min-count", "0", "--morph", "--output", "json",
                        "--mc-samples", "500"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);

    dictpin::ScenarioConfig c;
    c.dicts = {fx / "small.tsv"};
    c.min_count = 0;
    c.morph = true;
    c.mc_samples = 500;
    const auto expected = dictpin::run_scenario(c);
    const auto& rec = j[0];
    CHECK(rec["kind"] == "metrics");
    CHECK(rec["entropy_bits"].get<double>() == expected.metrics.entropy_bits);
    CHECK(rec["guesswork"].get<double>() == expected.metrics.guesswork);
    CHECK(rec["guesswork_bits"].get<double>() == expected.metrics.guesswork_bits);
    CHECK(rec["marginal_guesswork"].get<std::size_t>() == expected.metrics.marginal_guesswork);
    CHECK(rec["marginal_guesswork_bits"].get<double>() == expected.metrics.marginal_guesswork_bits);
    CHECK(rec["lambda_beta"].get<double>() == expected.metrics.marginal_success);
    CHECK(j[1]["kind"] == "monte_carlo");
    CHECK(j[1]["lambda_beta"].get<double>() == expected.monte_carlo->hit_rate);
    CHECK(j[2]["kind"] == "top_pin");
    CHECK(j[2]["probability"].get<double>() == expected.top[0].probability);
}

TEST_CASE("sweep output")
{
    Fixtures fx;
    const auto csv = run({"sweep", "--dict", fx / "small.tsv", "--min-count", "0", "--sweep-max", "4",
                          "--sweep-step", "2", "--output", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        rows.push_back(line);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].starts_with("k,entropy_bits,lambda_beta,"));
    CHECK(rows[1].starts_with("0,"));
    CHECK(rows[3].starts_with("4,"));
    CHECK(csv.out.find("k,entropy_bits") == csv.out.rfind("k,entropy_bits"));

    // sweep-max 0 reproduces analyze
    const auto zero = run({"sweep", "--dict", fx / "small.tsv", "--min-count", "0", "--sweep-max", "0", "--output",
                           "json"});
    const auto single = run({"analyze", "--dict", fx / "small.tsv", "--min-count", "0", "--output", "json"});
    const auto z = nlohmann::json::parse(zero.out);
    const auto s = nlohmann::json::parse(single.out);
    REQUIRE(z.size() == 1);
    for (const char* key : {"entropy_bits", "lambda_beta", "guesswork", "guesswork_bits", "marginal_guesswork",
                            "marginal_guesswork_bits", "support_size"})
        CHECK(z[0][key] == s[0][key]);

    CHECK(run({"sweep", "--dict", fx / "small.tsv", "--min-count", "0", "--sweep-max", "50"}).code == 2);
}

TEST_CASE("inspect")
{
    Fixtures fx;
    const auto r = run({"inspect", "--dict", fx / "three.tsv", "--min-count", "0", "--output", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["words"] == 3);
    CHECK(j["length_histogram"]["4"] == 2);
    CHECK(j["length_histogram"]["5"] == 1);

    const auto empty = run({"inspect", "--dict", fx / "empty.tsv"});
    CHECK(empty.code == 1);
    CHECK(empty.err.find("empty corpus") != std::string::npos);

    const auto sub = run({"inspect", "--dict", subtlexus, "--output", "json"});
    REQUIRE(sub.code == 0);
    CHECK(nlohmann::json::parse(sub.out)["retained"] == 60384);
}

TEST_CASE("tables")
{
    Fixtures fx;
    const auto r = run({"tables", "--subtlexus", subtlexus, "--output", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    bool saw_two_dict = false;
    for (const auto& rec : j) {
        CHECK(rec.contains("delta"));
        saw_two_dict |= rec["table"] == "two-dictionary";
    }
    CHECK_FALSE(saw_two_dict);
    CHECK(r.err.find("two-dictionary skipped") != std::string::npos);

    const auto human = run({"tables", "--subtlexus", subtlexus});
    CHECK(human.code == 0);
    CHECK(human.out.find("skipped: requires both") != std::string::npos);
    CHECK(human.out.find("== baseline:") != std::string::npos);

    CHECK(run({"tables"}).code == 1);

    const auto csv = run({"tables", "--subtlexus", subtlexus, "--output", "csv"});
    CHECK(csv.out.starts_with("table,scenario,metric,computed,published,delta\r\n"));
}
