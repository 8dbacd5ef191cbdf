#pragma once

// Umbrella header: everything in one include.

#include "syds/core.hpp"
#include "syds/evaluation.hpp"
#include "syds/hardness.hpp"
#include "syds/io.hpp"
#include "syds/learners.hpp"
#include "syds/matching.hpp"
#include "syds/observations.hpp"
#include "syds/rng.hpp"
#include "syds/theory.hpp"
