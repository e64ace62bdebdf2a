#pragma once

#include <string>
#include <vector>

#include "bisimod/model.hpp"

namespace bisimod {

/// Built-in example structures used throughout the tests and handy for
/// experimenting from the CLI:
///
///   example-3.5        three-world / two-world bi-model with a bisimulation
///   expressivity-1/2   identical single-world pairs, z empty vs z = {(w,v)}
///   undef-harmony-1/2  same models, z respecting vs breaking atomic harmony
///   undef-frame-1/2    isomorphic frames, z respecting vs breaking forth+back
///   znovacia           two isolated worlds per side, z = {(w,w1)}
///   znovacia-sub       its generated subframe: one world per side, z empty
///
/// Throws UnknownFixture for names outside the catalogue.
BiModel fixture(const std::string& name);

/// Names accepted by fixture(), sorted.
std::vector<std::string> fixture_names();

} // namespace bisimod
