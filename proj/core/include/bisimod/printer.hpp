#pragma once

#include <string>

#include "bisimod/formula.hpp"

namespace bisimod {

/// Render a formula back to surface syntax. With `resugar` the printer
/// re-introduces ~, <>, <b>, & and | wherever the corresponding desugaring
/// pattern matches (longest pattern first, so e.g. a conjunction is never
/// shown as a nest of negations). Either way, parse(render(f)) == f.
std::string render(const Formula& f, bool resugar = true);

} // namespace bisimod
