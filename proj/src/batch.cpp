#include "knotlattice/batch.hpp"

#include "knotlattice/errors.hpp"

#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotlattice {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<CorpusEntry> parse_corpus_jsonl(const std::string& text) {
    std::vector<CorpusEntry> entries;
    std::set<std::string> names;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw MalformedCorpus("line " + std::to_string(lineno) + ": " + e.what());
        }
        CorpusEntry ce;
        if (!j.contains("name") || !j["name"].is_string())
            throw MalformedCorpus("line " + std::to_string(lineno) + ": missing name");
        ce.name = j["name"].get<std::string>();
        if (!names.insert(ce.name).second)
            throw MalformedCorpus("duplicate corpus entry name: " + ce.name);
        if (!j.contains("pd")) throw MalformedCorpus("line " + std::to_string(lineno) + ": missing pd");
        if (j["pd"].is_string()) ce.pd = j["pd"].get<std::string>();
        else if (j["pd"].is_array()) ce.pd = json{{"pd", j["pd"]}}.dump();
        else throw MalformedCorpus("line " + std::to_string(lineno) + ": pd must be text or arc lists");
        if (j.contains("expected")) {
            const auto& e = j["expected"];
            if (e.contains("sigma")) ce.expected_sigma = e["sigma"].get<long long>();
            if (e.contains("alternating")) ce.expected_alternating = e["alternating"].get<bool>();
            if (e.contains("reduced")) ce.expected_reduced = e["reduced"].get<bool>();
            if (e.contains("c")) ce.expected_c = e["c"].get<long long>();
            if (e.contains("writhe")) ce.expected_writhe = e["writhe"].get<long long>();
        }
        entries.push_back(std::move(ce));
    }
    return entries;
}

namespace {

BatchEntryResult run_one(const CorpusEntry& ce) {
    BatchEntryResult r;
    r.name = ce.name;
    try {
        LinkDiagram d = parse_pd(ce.pd);
        r.report = analyze_diagram(d);
        r.ok = true;
        auto expect = [&](const char* field, auto expected, auto actual) {
            if (expected && *expected != actual) {
                std::ostringstream os;
                os << field << ": expected " << *expected << ", got " << actual;
                r.mismatches.push_back(os.str());
            }
        };
        expect("sigma", ce.expected_sigma, r.report.at("sigma_l").get<long long>());
        expect("alternating", ce.expected_alternating, r.report.at("alternating").at("verdict").get<bool>());
        expect("reduced", ce.expected_reduced, r.report.at("reduced").get<bool>());
        expect("c", ce.expected_c, r.report.at("c").get<long long>());
        expect("writhe", ce.expected_writhe, r.report.at("writhe").get<long long>());
    } catch (const Error& e) {
        r.ok = false;
        r.report = ordered_json{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    }
    return r;
}

} // namespace

BatchResult run_batch(const std::vector<CorpusEntry>& entries, int jobs) {
    BatchResult out;
    out.entries.resize(entries.size());
    const int n = static_cast<int>(entries.size());
#ifdef _OPENMP
    if (jobs < 1) jobs = 1;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < n; ++i) out.entries[static_cast<std::size_t>(i)] = run_one(entries[static_cast<std::size_t>(i)]);
#else
    for (int i = 0; i < n; ++i) out.entries[static_cast<std::size_t>(i)] = run_one(entries[static_cast<std::size_t>(i)]);
#endif
    for (const auto& r : out.entries) {
        if (!r.ok) out.failed++;
        if (!r.mismatches.empty()) out.mismatched++;
    }
    out.summary = ordered_json{{"entries", n}, {"failed", out.failed}, {"mismatched", out.mismatched}};
    return out;
}

} // namespace knotlattice
