#pragma once

// Umbrella header for the whole library.

#include "braid/cabling.hpp"
#include "braid/classifier.hpp"
#include "braid/errors.hpp"
#include "braid/expr.hpp"
#include "braid/garside.hpp"
#include "braid/mixed.hpp"
#include "braid/permutation.hpp"
#include "braid/presentation.hpp"
#include "braid/selfcheck.hpp"
#include "braid/surface.hpp"
#include "braid/word.hpp"
#include "braid/z2.hpp"
