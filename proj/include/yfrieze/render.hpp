#pragma once

#include "yfrieze/frieze.hpp"

#include <string>

namespace yfrieze {

// Staggered text layout: row i is indented by i half-steps so that each
// diamond reads W E across and N S above/below. With `border` set, type-A
// windows get a top and bottom row of 1's (friezes) or 0's (Y-friezes).
std::string render_grid(const PatternWindow& w, bool border = false);

// {"kind","cartan","semiring","cols":[lo,hi],"rows":[[...]],"period"}.
// Integer values that fit in 64 bits are emitted as JSON numbers, everything
// else as strings.
std::string window_to_json(const PatternWindow& w, int indent = -1);
PatternWindow window_from_json(const std::string& text);

// One line per column: m,v_1,...,v_r.
std::string window_to_csv(const PatternWindow& w);

} // namespace yfrieze
