#pragma once

#include "magvac/bernoulli.hpp"
#include "magvac/constants.hpp"
#include "magvac/lagrangian.hpp"
#include "magvac/moment.hpp"
#include "magvac/optics.hpp"
#include "magvac/quadrature.hpp"
#include "magvac/scan.hpp"
#include "magvac/specfun.hpp"
#include "magvac/validation.hpp"
