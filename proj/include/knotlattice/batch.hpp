#pragma once

#include "knotlattice/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotlattice {

struct CorpusEntry {
    std::string name;
    std::string pd;
    std::optional<long long> expected_sigma;
    std::optional<bool> expected_alternating;
    std::optional<bool> expected_reduced;
    std::optional<long long> expected_c;
    std::optional<long long> expected_writhe;
};

/// Parses a JSONL corpus (one entry object per line, blank lines ignored).
/// Duplicate names are rejected.
std::vector<CorpusEntry> parse_corpus_jsonl(const std::string& text);

struct BatchEntryResult {
    std::string name;
    bool ok = false;                     // parsed and analyzed without error
    std::vector<std::string> mismatches; // expected-field violations
    nlohmann::ordered_json report;       // analysis report or {"error": ...}
};

struct BatchResult {
    std::vector<BatchEntryResult> entries; // in corpus order
    int failed = 0;
    int mismatched = 0;
    nlohmann::ordered_json summary;
};

/// Runs every entry; `jobs` > 1 distributes entries across threads.  Output is
/// ordered by the corpus and byte-identical for any job count.
BatchResult run_batch(const std::vector<CorpusEntry>& entries, int jobs);

} // namespace knotlattice
