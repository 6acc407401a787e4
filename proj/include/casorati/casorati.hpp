#pragma once

#include "casorati/casoratian.hpp"
#include "casorati/determinants.hpp"
#include "casorati/errors.hpp"
#include "casorati/functions.hpp"
#include "casorati/matrix.hpp"
#include "casorati/polynomial.hpp"
#include "casorati/random.hpp"
#include "casorati/rational.hpp"
#include "casorati/scalars.hpp"
#include "casorati/solver.hpp"
#include "casorati/theory.hpp"
