#pragma once

// Umbrella header for the hyperspan library.

#include "hyperspan/core.hpp"
#include "hyperspan/decomposition.hpp"
#include "hyperspan/greedy.hpp"
#include "hyperspan/independence.hpp"
#include "hyperspan/io.hpp"
#include "hyperspan/matching.hpp"
#include "hyperspan/testkit.hpp"
