#pragma once

// Homotopy classification of maps between long-ray manifolds:
// antichains, lattice terms, direction matrices, the long line and pipes.

#include "antichain.hpp"
#include "cofinality.hpp"
#include "direction.hpp"
#include "errors.hpp"
#include "long_line.hpp"
#include "parser.hpp"
#include "pipe.hpp"
#include "preorder.hpp"
#include "rational.hpp"
#include "subset.hpp"
#include "term.hpp"
