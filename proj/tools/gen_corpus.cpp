#include "support/corpus.hpp"

#include <fstream>
#include <iostream>

// Regenerates the bundled corpus files.  Output is deterministic; the test
// suite checks the committed files against a fresh generation.
int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    using namespace knotlattice::testsupport;
    {
        std::ofstream out(dir + "/corpus_knots.jsonl", std::ios::binary);
        out << corpus_to_jsonl(generate_knot_corpus(8));
    }
    {
        std::ofstream out(dir + "/tait_pairs.jsonl", std::ios::binary);
        out << pairs_to_jsonl(generate_tait_pairs());
    }
    std::cout << "wrote " << dir << "/corpus_knots.jsonl and " << dir << "/tait_pairs.jsonl\n";
    return 0;
}
