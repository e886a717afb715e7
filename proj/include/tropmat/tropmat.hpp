#pragma once

// Exact computation in tropical matrix monoids: semiring arithmetic,
// generator families, constructive 2x2 factorization, monoid enumeration,
// and verification drivers.

#include "tropmat/errors.hpp"
#include "tropmat/factorize.hpp"
#include "tropmat/froidure_pin.hpp"
#include "tropmat/generators.hpp"
#include "tropmat/matrix.hpp"
#include "tropmat/semiring.hpp"
#include "tropmat/verify.hpp"
#include "tropmat/word.hpp"
