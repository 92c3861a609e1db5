#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csem::report {

struct Row {
    std::string quantity; // "raw" or "cosine"
    std::string pair;     // "sentence a | sentence b"
    std::string path;     // "", "stipulated" or "estimated"
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0; // 0 means exact
    bool pass = false;
};

struct RegressionReport {
    std::vector<Row> rows;
    bool all_pass = false;
};

// Recomputes every value in the built-in reference table through the full
// token -> reduction -> contraction pipeline and compares against the
// pinned expectations. Raw inner products must match exactly, cosines to
// within 0.001.
RegressionReport run_reference_regression();

enum class Format { table, tsv, json_lines };

void render(std::ostream& out, const RegressionReport& report, Format format);

} // namespace csem::report
