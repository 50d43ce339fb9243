#pragma once

#include "permpat/bigint.hpp"
#include "permpat/bijection.hpp"
#include "permpat/census.hpp"
#include "permpat/counting.hpp"
#include "permpat/errors.hpp"
#include "permpat/formulas.hpp"
#include "permpat/permutation.hpp"
#include "permpat/recfit.hpp"
#include "permpat/sequence.hpp"
