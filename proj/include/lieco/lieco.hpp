#pragma once

#include "lieco/scalar.hpp"
#include "lieco/poly.hpp"
#include "lieco/jet.hpp"
#include "lieco/matrix.hpp"
#include "lieco/linalg.hpp"
#include "lieco/random.hpp"
#include "lieco/algebra.hpp"
#include "lieco/invariants.hpp"
#include "lieco/regularity.hpp"
#include "lieco/korbits.hpp"
#include "lieco/io.hpp"
#include "lieco/harness.hpp"
