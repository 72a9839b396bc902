#pragma once

#include "pavemat/designs.hpp"
#include "pavemat/ehrhart.hpp"
#include "pavemat/matroid.hpp"
#include "pavemat/numbers.hpp"
#include "pavemat/oracle.hpp"
#include "pavemat/parallel.hpp"
#include "pavemat/polynomial.hpp"
#include "pavemat/positivity.hpp"
#include "pavemat/subsets.hpp"
#include "pavemat/volume.hpp"
