#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wtss/cli.hpp"
#include "wtss/report.hpp"
#include "wtss/wtg.hpp"

using namespace wtss;
using namespace testing;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

void check_parse_error(const std::string& text, int line, const std::string& fragment) {
    try {
        parse_wtg(text);
        FAIL("expected a parse error for: " << text);
    } catch (const WtgParseError& e) {
        CHECK(e.line() == line);
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
}

const std::string header = "wtg 1\nmode undirected\nn 2\nv 1 1\nv 2 1\n";

}  // namespace

TEST_SUITE("wtg") {
    TEST_CASE("parse: P3 fixture") {
        const auto doc = parse_wtg(read_file(fixture_path("p3.wtg")));
        CHECK(doc.instance == path3());
        CHECK_FALSE(doc.incentives.has_value());
    }

    TEST_CASE("parse: comments, blank lines and any record order in the body") {
        const auto doc = parse_wtg("# comment\n\nwtg 1  # version\nmode undirected\nn 3\ne 3 2 1\nv 3 1\ne 1 2 1\nv 1 1\n\tv 2 1\n");
        CHECK(doc.instance == path3());
    }

    TEST_CASE("parse: errors carry line and column") {
        check_parse_error(header + "e 1 1 1\n", 6, "self-loop");
        check_parse_error(header + "e 1 2 3/0\n", 6, "zero denominator");
        check_parse_error(header + "e 1 3 1\n", 6, "unknown vertex 3");
        check_parse_error(header + "e 1 2 1\ne 2 1 1\n", 7, "duplicate edge");
        check_parse_error(header + "v 1 2\n", 6, "duplicate vertex");
        check_parse_error(header + "e 1 2 -1\n", 6, "negative weight");
        check_parse_error("wtg 1\nmode undirected\nn 2\nv 1 1\n", 4, "missing threshold line for vertex 2");
        check_parse_error("wtg 2\n", 1, "unsupported format version");
        check_parse_error("mode undirected\n", 1, "expected header");
        check_parse_error("wtg 1\nmode sideways\n", 2, "unknown mode");
        check_parse_error(header + "x 1 2\n", 6, "unknown record");
        check_parse_error(header + "e 1 2\n", 6, "expected 3 field(s)");
        check_parse_error(header + "e 1 2 1.5\n", 6, "malformed number");
        check_parse_error(header + "p 1 1\np 1 2\n", 7, "duplicate incentive");
        check_parse_error("wtg 1\nmode undirected\n", 2, "incomplete header");

        try {
            parse_wtg(header + "e 1 1 1\n");
        } catch (const WtgParseError& e) {
            CHECK(e.column() == 3);
            CHECK(std::string(e.what()).rfind("line 6, column 3: ", 0) == 0);
        }
    }

    TEST_CASE("directed files keep both arcs of a pair") {
        const auto doc = parse_wtg("wtg 1\nmode directed\nn 2\nv 1 1\nv 2 1\ne 1 2 1\ne 2 1 1/2\n");
        CHECK(doc.instance.edges().size() == 2);
        CHECK(doc.instance.weight(b, a) == Rational(1, 2));
    }

    TEST_CASE("incentive lines") {
        const auto doc = parse_wtg(read_file(fixture_path("triangle_incentives.wtg")));
        REQUIRE(doc.incentives.has_value());
        CHECK(*doc.incentives == incentives({2, 1, 0}));
        CHECK(parse_incentives("# p only\np 2 3/2\n", 3) == incentives({0, Rational(3, 2), 0}));
        CHECK_THROWS_AS(parse_incentives("p 4 1\n", 3), WtgParseError);
        CHECK_THROWS_AS(parse_incentives("v 1 1\n", 3), WtgParseError);
    }

    TEST_CASE("serialize: canonical and exact") {
        const auto g = Instance::undirected({Rational(3, 2), 0}, {{b, a, Rational(6, 4)}});
        CHECK(serialize_wtg(g) == "wtg 1\nmode undirected\nn 2\nv 1 3/2\nv 2 0\ne 1 2 3/2\n");
    }

    TEST_CASE("round trip on every fixture") {
        for (const auto& entry : std::filesystem::directory_iterator(WTSS_FIXTURE_DIR)) {
            if (entry.path().extension() != ".wtg") continue;
            CAPTURE(entry.path().string());
            const auto text = read_file(entry.path().string());
            const auto doc = parse_wtg(text);
            const auto* p = doc.incentives ? &*doc.incentives : nullptr;
            CHECK(serialize_wtg(doc.instance, p) == text);
        }
    }
}

TEST_SUITE("report") {
    TEST_CASE("solve report for P3 carries an exact cost string") {
        const auto r = cli({"--deterministic", "solve", "--method", "degenerate", fixture_path("p3.wtg")});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["kind"] == "solve");
        CHECK(j["method"] == "degenerate");
        CHECK(j["cost"] == "1");
        CHECK(j["incentives"] == Json::array({"1", "0", "0"}));
        CHECK(j["certificate"]["order"] == Json::array({1, 2, 3}));
        CHECK_FALSE(j.contains("wall_time_ms"));
    }

    TEST_CASE("trace report lists rounds in order with ascending ids") {
        const auto g = Instance::undirected({1, 1, 1, 2}, {{a, c, 1}, {a, b, 1}, {b, d, 1}, {c, d, 1}});
        const auto j = trace_report(g, run_activation(g, {a}));
        CHECK(j["rounds"] == Json::parse("[[1],[2,3],[4]]"));
        CHECK(j["num_rounds"] == 2);
        CHECK(j["activates_all"] == true);
    }

    TEST_CASE("rationals are never printed as decimals") {
        const auto r = cli({"--deterministic", "solve", fixture_path("halves.wtg")});
        if (r.code == 0) CHECK(r.out.find('.') == std::string::npos);
        const auto o = cli({"--deterministic", "oracle", "target-vector", fixture_path("halves.wtg")});
        REQUIRE(o.code == 0);
        CHECK(o.out.find('.') == std::string::npos);
    }

    TEST_CASE("wall time appears unless deterministic") {
        const auto timed = cli({"validate", fixture_path("p3.wtg")});
        CHECK(Json::parse(timed.out).contains("wall_time_ms"));
        CHECK(emit_report(Json{{"kind", "x"}}, std::nullopt) == "{\n  \"kind\": \"x\"\n}\n");
    }
}

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        CHECK(cli({}).code == exit_usage);
        CHECK(cli({"frobnicate"}).code == exit_usage);
        CHECK(cli({"solve", "--method", "magic", fixture_path("p3.wtg")}).code == exit_usage);
        CHECK(cli({"validate", fixture_path("no-such-file.wtg")}).code == exit_invalid_input);
        CHECK(cli({"solve", "--method", "degenerate", fixture_path("triangle.wtg")}).code == exit_ok);
        CHECK(cli({"oracle", "target-set", fixture_path("path25.wtg")}).code == exit_oracle_limit);
        CHECK(cli({"oracle", "target-set", "--limit-n", "25", fixture_path("path25.wtg")}).code == exit_ok);
        CHECK(cli({"degeneracy", fixture_path("directed_arc.wtg")}).code == exit_precondition);
        CHECK(cli({"solve", fixture_path("directed_arc.wtg")}).code == exit_precondition);
        CHECK(cli({"reduce", "complete", fixture_path("halves.wtg")}).code == exit_precondition);
        CHECK(cli({"simulate", "--seed-set", "1,9", fixture_path("p3.wtg")}).code == exit_invalid_input);
        CHECK(cli({"gen", "--family", "lattice"}).code == exit_usage);
        CHECK(cli({"check", "no-such-sweep"}).code == exit_usage);
    }

    TEST_CASE("help goes to standard output") {
        const auto r = cli({"--help"});
        CHECK(r.code == exit_ok);
        CHECK(r.out.find("simulate") != std::string::npos);
    }

    TEST_CASE("diagnostics go to standard error") {
        const auto bad = std::filesystem::temp_directory_path() / "wtss_loop.wtg";
        {
            std::ofstream f(bad);
            f << header << "e 1 1 1\n";
        }
        const auto r = cli({"validate", bad.string()});
        CHECK(r.code == exit_invalid_input);
        CHECK(r.out.empty());
        CHECK(r.err.find("line 6") != std::string::npos);
        CHECK(r.err.find("self-loop") != std::string::npos);
        std::filesystem::remove(bad);
    }

    TEST_CASE("simulate with a seed set, an incentive file and embedded incentives") {
        auto seeded = Json::parse(cli({"--deterministic", "simulate", "--seed-set", "1", fixture_path("p3.wtg")}).out);
        CHECK(seeded["rounds"] == Json::parse("[[1],[2],[3]]"));
        CHECK(seeded["seed_set"] == Json::array({1}));

        auto embedded = Json::parse(cli({"--deterministic", "simulate", fixture_path("triangle_incentives.wtg")}).out);
        CHECK(embedded["rounds"] == Json::parse("[[1],[2],[3]]"));
        CHECK(embedded["cost"] == "3");

        const auto pfile = std::filesystem::temp_directory_path() / "wtss_p.txt";
        {
            std::ofstream f(pfile);
            f << "p 1 2\np 2 2\np 3 2\n";
        }
        auto external = Json::parse(
            cli({"--deterministic", "simulate", "--incentives", pfile.string(), fixture_path("triangle.wtg")}).out);
        CHECK(external["rounds"] == Json::parse("[[1,2,3]]"));
        CHECK(external["cost"] == "6");
        std::filesystem::remove(pfile);
    }

    TEST_CASE("every solve method's witness re-verifies through simulate") {
        struct Case {
            std::string method;
            std::string fixture;
        };
        for (const auto& [method, fixture] : std::vector<Case>{{"auto", "p3.wtg"},
                                                                {"degenerate", "triangle.wtg"},
                                                                {"min-or-full", "star_min_or_full.wtg"},
                                                                {"slack-set", "triangle.wtg"},
                                                                {"vc-bound", "p3.wtg"}}) {
            CAPTURE(method);
            const auto r = cli({"--deterministic", "solve", "--method", method, fixture_path(fixture)});
            REQUIRE(r.code == 0);
            const auto j = Json::parse(r.out);
            CliRun sim;
            if (j.contains("incentives")) {
                const auto pfile = std::filesystem::temp_directory_path() / "wtss_witness.txt";
                {
                    std::ofstream f(pfile);
                    for (std::size_t v = 0; v < j["incentives"].size(); ++v) {
                        f << "p " << v + 1 << " " << j["incentives"][v].get<std::string>() << "\n";
                    }
                }
                sim = cli({"--deterministic", "simulate", "--incentives", pfile.string(), fixture_path(fixture)});
                std::filesystem::remove(pfile);
            } else {
                std::string seeds;
                for (const auto& v : j["target_set"]) seeds += std::to_string(v.get<int>()) + ",";
                sim = cli({"--deterministic", "simulate", "--seed-set", seeds, fixture_path(fixture)});
            }
            REQUIRE(sim.code == 0);
            CHECK(Json::parse(sim.out)["activates_all"] == true);
        }
    }

    TEST_CASE("star fixture: min-or-full and auto agree on cost 2") {
        const auto j = Json::parse(
            cli({"--deterministic", "solve", "--method", "min-or-full", fixture_path("star_min_or_full.wtg")}).out);
        CHECK(j["method"] == "min-or-full");
        CHECK(j["cost"] == "2");
        CHECK(j["incentives"] == Json::array({"1", "0", "1"}));
        const auto automatic = Json::parse(cli({"--deterministic", "solve", fixture_path("star_min_or_full.wtg")}).out);
        CHECK(automatic["method"] == "degenerate");
        CHECK(automatic["cost"] == "2");
    }

    TEST_CASE("complete-graph reduction preserves dyn on P3") {
        const auto image = std::filesystem::temp_directory_path() / "wtss_image.wtg";
        const auto receipt = std::filesystem::temp_directory_path() / "wtss_receipt.json";
        const auto r = cli({"reduce", "complete", "--receipt", receipt.string(), fixture_path("p3.wtg")});
        REQUIRE(r.code == 0);
        CHECK(r.out == "wtg 1\nmode undirected\nn 3\nv 1 3\nv 2 3\nv 3 3\ne 1 2 3\ne 1 3 1\ne 2 3 3\n");
        {
            std::ofstream f(image);
            f << r.out;
        }
        const auto source_dyn = Json::parse(cli({"--deterministic", "oracle", "target-set", fixture_path("p3.wtg")}).out);
        const auto image_dyn = Json::parse(cli({"--deterministic", "oracle", "target-set", image.string()}).out);
        CHECK(source_dyn["optimum"] == image_dyn["optimum"]);
        const auto rec = Json::parse(read_file(receipt.string()));
        CHECK(rec["kind"] == "reduction");
        CHECK(rec["image_n"] == 3);
        std::filesystem::remove(image);
        std::filesystem::remove(receipt);
    }

    TEST_CASE("hub and bidirect reductions") {
        const auto hub = cli({"reduce", "hub", fixture_path("p3.wtg")});
        REQUIRE(hub.code == 0);
        CHECK(parse_wtg(hub.out).instance.n() == 4);
        const auto bi = cli({"reduce", "bidirect", fixture_path("triangle.wtg")});
        REQUIRE(bi.code == 0);
        CHECK(parse_wtg(bi.out).instance.edges().size() == 6);
    }

    TEST_CASE("alternate spellings of reduction and method names") {
        const auto p3 = fixture_path("p3.wtg");
        CHECK(cli({"reduce", "prop1", p3}).out == cli({"reduce", "complete", p3}).out);
        CHECK(cli({"reduce", "prop3", p3}).out == cli({"reduce", "hub", p3}).out);
        CHECK(cli({"--deterministic", "solve", "--method", "algorithm-one", p3}).out ==
              cli({"--deterministic", "solve", "--method", "slack-set", p3}).out);
    }

    TEST_CASE("gen is reproducible and emits canonical WTG") {
        const std::vector<std::string> args{"gen", "--family", "degenerate", "--n", "7", "--weights", "halves", "--seed", "42"};
        const auto first = cli(args);
        REQUIRE(first.code == 0);
        CHECK(first.out == cli(args).out);
        CHECK(serialize_wtg(parse_wtg(first.out).instance) == first.out);
        const auto other = cli({"gen", "--family", "degenerate", "--n", "7", "--weights", "halves", "--seed", "43"});
        CHECK(other.out != first.out);
    }

    TEST_CASE("check runs a sweep and reports tallies") {
        const auto r = cli({"--deterministic", "check", "roundtrip", "--count", "5"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["instances"] == 5);
    }

    TEST_CASE("deterministic output is byte-identical across runs") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"--deterministic", "solve", fixture_path("triangle.wtg")},
                 {"--deterministic", "oracle", "target-vector", fixture_path("halves.wtg")},
                 {"--deterministic", "degeneracy", fixture_path("halves.wtg")},
                 {"simulate", "--deterministic", "--seed-set", "2", fixture_path("p3.wtg")}}) {
            const auto first = cli(args);
            REQUIRE(first.code == 0);
            CHECK(first.out == cli(args).out);
            CHECK(first.out.find("wall_time_ms") == std::string::npos);
        }
    }
}
