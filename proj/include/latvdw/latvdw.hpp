#pragma once

#include "constants.hpp"
#include "dynamics.hpp"
#include "emission.hpp"
#include "forces.hpp"
#include "greens.hpp"
#include "linalg.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "system.hpp"
