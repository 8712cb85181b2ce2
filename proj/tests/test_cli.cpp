#include "support.hpp"

#include "lrsk/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace lrsk;
using namespace lrsk::test;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "lrsk");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_text(std::string_view name) { return std::string(embedded_fixture(name)); }

} // namespace

TEST_CASE("forward and inverse agree with the library") {
    const auto fwd = run({"forward"}, fixture_text("example_parmat"));
    REQUIRE(fwd.code == cli::kSuccess);
    CHECK(parse_document(fwd.out) == parse_document(fixture_text("example_tableau_pair")));
    CHECK(fwd.out == serialize(Document{psi(fixture<ParMatFlat>("example_parmat"))}) + "\n");

    const auto inv = run({"inverse", "--input", "-"}, fixture_text("closing_tableau_pair"));
    REQUIRE(inv.code == cli::kSuccess);
    CHECK(parse_document(inv.out) == parse_document(fixture_text("closing_parmat")));

    CHECK(run({"forward"}, fixture_text("example_bcm")).code == cli::kInputError);
    CHECK(run({"inverse"}, fixture_text("example_parmat")).code == cli::kInputError);
}

TEST_CASE("convert walks the chain in both directions") {
    const auto to_biword = run({"convert", "--to", "flagged-biword"}, fixture_text("example_parmat"));
    REQUIRE(to_biword.code == cli::kSuccess);
    CHECK(parse_document(to_biword.out) == parse_document(fixture_text("example_biword")));
    const auto to_bcm = run({"convert", "--to", "bcm"}, fixture_text("closing_tableau_pair"));
    REQUIRE(to_bcm.code == cli::kSuccess);
    CHECK(parse_document(to_bcm.out) == parse_document(fixture_text("closing_bcm")));
    const auto same = run({"convert"}, fixture_text("example_bcm"));
    CHECK(same.out == serialize(parse_document(fixture_text("example_bcm"))) + "\n");
    CHECK(run({"convert", "--to", "multicomposition"}, fixture_text("example_bcm")).code ==
          cli::kInputError);
    CHECK(run({"convert", "--to", "matrix"}, fixture_text("example_bcm")).code == cli::kInputError);
    CHECK(run({"convert", "--pretty"}, fixture_text("example_bcm")).out.find("03") !=
          std::string::npos);
}

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "--family", "multipartitions", "--n", "2", "--level", "2", "--count"}).out ==
          "5\n");
    const auto lines = run({"enumerate", "--family", "multicompositions", "--n", "1", "--level", "2",
                       "--max-length", "1"});
    CHECK(lines.out ==
          "{\"kind\":\"multicomposition\",\"level\":2,\"payload\":[[],[1]]}\n"
          "{\"kind\":\"multicomposition\",\"level\":2,\"payload\":[[1],[]]}\n");
    CHECK(run({"enumerate", "--family", "parmat", "--nu", "[[],[1]]", "--mu", "[[],[1]]", "--count"}).out ==
          "2\n");
    CHECK(run({"enumerate", "--family", "bcm", "--nu", "[[1,1]]", "--mu", "[[1,1]]", "--count"}).out ==
          "2\n");
    CHECK(run({"enumerate", "--family", "flagged-biwords", "--nu", "[[1]]", "--mu", "[[2]]", "--count"}).out ==
          "0\n");
    CHECK(run({"enumerate", "--family", "sst", "--shape", "[[2,1]]", "--mu", "[[1,1,1]]", "--count"}).out ==
          "2\n");
    const auto sst = run({"enumerate", "--family", "sst", "--shape", "[[1]]", "--mu", "[[1]]"});
    CHECK(sst.out == "[[[[1,1]]]]\n");
    CHECK(run({"enumerate", "--family", "parmat", "--nu", "[[1]]", "--mu", "[[2]]"}).code ==
          cli::kInputError);
    CHECK(run({"enumerate", "--family", "parmat", "--nu", "[[1,0]]", "--mu", "[[1]]"}).code ==
          cli::kInputError);
    CHECK(run({"enumerate", "--family", "widgets", "--n", "1", "--level", "1"}).code == cli::kInputError);
    CHECK(run({"enumerate", "--family", "multicompositions"}).code == cli::kInputError);
    CHECK(run({"enumerate", "--family", "multicompositions", "--n", "99", "--level", "1"}).code ==
          cli::kInputError);
}

TEST_CASE("verify emits a passing report") {
    const auto r = run({"verify", "--budget", "n=3,level=2,length=3", "--threads", "2"});
    REQUIRE(r.code == cli::kSuccess);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["ok"] == true);
    CHECK(report["failure_count"] == 0);
    CHECK(report["budget"] == "n=3,level=2,length=3");
    CHECK(report["checks"]["round_trip"]["failed"] == 0);
    CHECK(run({"verify", "--budget", "n=3,level=9"}).code == cli::kInputError);
}

TEST_CASE("demo reproduces the worked examples") {
    const auto r = run({"demo"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    std::ostringstream log;
    CHECK(cli::run_demo(log));
    CHECK(log.str() == r.out);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({"forward", "--bogus"}).code == cli::kInputError);
    const auto bad = run({"convert"}, R"({"kind":"bcm","level":1,"payload":{"entries":[{"p":1,"q":1,"i":1,"j":1,"parts":[0,1,0]}]}})");
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("trailing zero") != std::string::npos);
    CHECK(run({"convert"}, "{").code == cli::kInputError);
    CHECK(run({"convert", "--input", "/nonexistent/file.json"}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kSuccess);
}
