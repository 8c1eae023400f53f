// Umbrella include.
#pragma once

#include "verlinde/characters.hpp"
#include "verlinde/cyclotomic.hpp"
#include "verlinde/dimensions.hpp"
#include "verlinde/exact_linalg.hpp"
#include "verlinde/gluing.hpp"
#include "verlinde/identities.hpp"
#include "verlinde/index_sets.hpp"
#include "verlinde/numeric.hpp"
#include "verlinde/weight_lattice.hpp"
