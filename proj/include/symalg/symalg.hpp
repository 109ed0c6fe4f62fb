#ifndef SYMALG_SYMALG_HPP
#define SYMALG_SYMALG_HPP

#include "symalg/diff_operator.hpp"
#include "symalg/errors.hpp"
#include "symalg/gl_symbol.hpp"
#include "symalg/json_io.hpp"
#include "symalg/matrix.hpp"
#include "symalg/morphism.hpp"
#include "symalg/multi_index.hpp"
#include "symalg/oracles.hpp"
#include "symalg/polynomial.hpp"
#include "symalg/random_gen.hpp"
#include "symalg/rational.hpp"
#include "symalg/suites.hpp"
#include "symalg/symbol.hpp"

#endif  // SYMALG_SYMALG_HPP
