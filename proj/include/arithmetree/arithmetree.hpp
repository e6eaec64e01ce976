#pragma once

#include "arithmetree/binary_arith.hpp"
#include "arithmetree/config.hpp"
#include "arithmetree/counting.hpp"
#include "arithmetree/enumerate.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/expr.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/notation.hpp"
#include "arithmetree/planar_arith.hpp"
#include "arithmetree/primes.hpp"
#include "arithmetree/tree.hpp"
#include "arithmetree/uexpr.hpp"
#include "arithmetree/verify.hpp"
