#pragma once

// Umbrella header: exact polynomial arithmetic, a Groebner-basis engine with
// radical-membership certification, and the up-to-radical generating-set
// constructions together with the bundled reference cases.

#include "radgen/dimension.hpp"
#include "radgen/elimination.hpp"
#include "radgen/errors.hpp"
#include "radgen/field.hpp"
#include "radgen/groebner.hpp"
#include "radgen/ideal.hpp"
#include "radgen/io.hpp"
#include "radgen/lift.hpp"
#include "radgen/matrix_criterion.hpp"
#include "radgen/membership.hpp"
#include "radgen/monomial.hpp"
#include "radgen/paper_suite.hpp"
#include "radgen/parse.hpp"
#include "radgen/polynomial.hpp"
#include "radgen/prop1.hpp"
#include "radgen/ring.hpp"
#include "radgen/sv.hpp"
