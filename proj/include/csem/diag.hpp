#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace csem {

enum class Strictness { lenient, strict };

// A non-fatal problem found while processing input. line == 0 means the
// diagnostic is not tied to a specific line.
struct Diagnostic {
    std::size_t line = 0;
    std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

} // namespace csem
