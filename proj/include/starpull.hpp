#pragma once

// Everything: kernel arithmetic, base domains, the pullback calculus, star
// operations, class maps, the seeded suites and the expression front end.

#include "starpull/class_maps.hpp"
#include "starpull/cli/evaluator.hpp"
#include "starpull/harness.hpp"
