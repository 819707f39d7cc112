#pragma once

// Umbrella header: the whole tripod phase-gate library.

#include "tripod/config_io.hpp"
#include "tripod/constants.hpp"
#include "tripod/detunings.hpp"
#include "tripod/dipole.hpp"
#include "tripod/errors.hpp"
#include "tripod/gate.hpp"
#include "tripod/oracle.hpp"
#include "tripod/params.hpp"
#include "tripod/propagation.hpp"
#include "tripod/search.hpp"
#include "tripod/susceptibility.hpp"
