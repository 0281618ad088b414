#ifndef NOETHER_NOETHER_HPP
#define NOETHER_NOETHER_HPP

// Umbrella header for the whole engine.

#include "noether/currents.hpp"
#include "noether/errors.hpp"
#include "noether/expr.hpp"
#include "noether/field_system.hpp"
#include "noether/gauge.hpp"
#include "noether/homotopy.hpp"
#include "noether/jet_calculus.hpp"
#include "noether/numverify.hpp"
#include "noether/parser.hpp"
#include "noether/polynomial.hpp"
#include "noether/random_exprs.hpp"
#include "noether/rational.hpp"
#include "noether/symbol.hpp"

#endif
