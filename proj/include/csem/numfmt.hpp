#pragma once

#include <string>

namespace csem {

// Weight/raw-score formatting: integral values print without a fraction,
// everything else with round-trip precision.
std::string format_number(double v);

// Fixed three decimals, ties to even. Used for cosine output.
std::string format_fixed3(double v);

} // namespace csem
