#pragma once

#include "polyjordan/complex_roots.hpp"
#include "polyjordan/error.hpp"
#include "polyjordan/expr.hpp"
#include "polyjordan/flat_points.hpp"
#include "polyjordan/jordan.hpp"
#include "polyjordan/poly.hpp"
#include "polyjordan/rational.hpp"
#include "polyjordan/real_roots.hpp"
