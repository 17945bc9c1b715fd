// Umbrella header.
#pragma once

#include "ternary/arith.hpp"
#include "ternary/catalog.hpp"
#include "ternary/forms.hpp"
#include "ternary/genus.hpp"
#include "ternary/local_solver.hpp"
#include "ternary/spinor.hpp"
#include "ternary/splitting.hpp"
#include "ternary/verify.hpp"
