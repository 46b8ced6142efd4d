#include <doctest.h>

#include "knotlattice/batch.hpp"
#include "knotlattice/errors.hpp"

#include "support/corpus.hpp"

#include <fstream>
#include <sstream>

using namespace knotlattice;
using namespace knotlattice::testsupport;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string batch_output(const BatchResult& r) {
    nlohmann::ordered_json out;
    out["summary"] = r.summary;
    out["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        out["entries"].push_back({{"name", e.name}, {"ok", e.ok}, {"mismatches", e.mismatches},
                                  {"report", e.report}});
    }
    return out.dump();
}

} // namespace

TEST_CASE("bundled corpus runs clean and matches a fresh generation") {
    std::string text = slurp(std::string(KNOTLATTICE_DATA_DIR) + "/corpus_knots.jsonl");
    CHECK(text == corpus_to_jsonl(generate_knot_corpus(8)));

    auto entries = parse_corpus_jsonl(text);
    CHECK(entries.size() >= 35);
    BatchResult res = run_batch(entries, 1);
    CHECK(res.failed == 0);
    CHECK(res.mismatched == 0);
}

TEST_CASE("parallel and serial batch runs are byte-identical") {
    std::string text = slurp(std::string(KNOTLATTICE_DATA_DIR) + "/corpus_knots.jsonl");
    auto entries = parse_corpus_jsonl(text);
    BatchResult serial = run_batch(entries, 1);
    BatchResult parallel = run_batch(entries, 4);
    CHECK(batch_output(serial) == batch_output(parallel));
}

TEST_CASE("a corrupted entry is reported without stopping the run") {
    std::string corpus =
        R"({"name": "good", "pd": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"})"
        "\n"
        R"({"name": "bad", "pd": "X[1,4,2]"})"
        "\n";
    auto entries = parse_corpus_jsonl(corpus);
    BatchResult res = run_batch(entries, 2);
    CHECK(res.failed == 1);
    CHECK(res.entries[0].ok);
    CHECK_FALSE(res.entries[1].ok);
    CHECK(res.entries[1].report.at("error").at("code") == "MalformedPd");
}

TEST_CASE("expected-field mismatches are flagged") {
    std::string corpus = R"({"name": "tre", "pd": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "expected": {"sigma": -7}})"
                         "\n";
    auto entries = parse_corpus_jsonl(corpus);
    BatchResult res = run_batch(entries, 1);
    CHECK(res.mismatched == 1);
    REQUIRE(res.entries[0].mismatches.size() == 1);
}

TEST_CASE("corpus files reject duplicate names and bad lines") {
    CHECK_THROWS_AS(parse_corpus_jsonl("{\"name\":\"a\",\"pd\":\"X[1,1,2,2]\"}\n{\"name\":\"a\",\"pd\":\"X[1,1,2,2]\"}\n"),
                    MalformedCorpus);
    CHECK_THROWS_AS(parse_corpus_jsonl("not json\n"), MalformedCorpus);
    CHECK_THROWS_AS(parse_corpus_jsonl("{\"pd\":\"X[1,1,2,2]\"}\n"), MalformedCorpus);
}

TEST_CASE("tait pairs file matches a fresh generation") {
    std::string text = slurp(std::string(KNOTLATTICE_DATA_DIR) + "/tait_pairs.jsonl");
    CHECK(text == pairs_to_jsonl(generate_tait_pairs()));
}

TEST_CASE("pd arc-list corpus form is accepted") {
    std::string corpus = R"({"name": "kink", "pd": [[1,1,2,2]]})"
                         "\n";
    auto entries = parse_corpus_jsonl(corpus);
    BatchResult res = run_batch(entries, 1);
    CHECK(res.failed == 0);
    CHECK(res.entries[0].report.at("c") == 1);
}
