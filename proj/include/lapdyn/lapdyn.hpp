#pragma once

#include "lapdyn/digraph.hpp"
#include "lapdyn/dynamics.hpp"
#include "lapdyn/errors.hpp"
#include "lapdyn/kernels.hpp"
#include "lapdyn/laplacian.hpp"
#include "lapdyn/matrix.hpp"
#include "lapdyn/random_walk.hpp"
#include "lapdyn/spectrum.hpp"
#include "lapdyn/taxonomy.hpp"
