#pragma once

// Umbrella header: exact spectral engine for continuous-time quantum walks
// on Cayley graphs of S_n generated by conjugacy classes.

#include "symwalk/characters.hpp"
#include "symwalk/errors.hpp"
#include "symwalk/exact.hpp"
#include "symwalk/limiting.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/walk_spectrum.hpp"
