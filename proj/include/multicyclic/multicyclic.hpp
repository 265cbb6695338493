#pragma once

#include "codes.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "orbits.hpp"
#include "ring.hpp"
#include "spectral.hpp"
#include "verify.hpp"
