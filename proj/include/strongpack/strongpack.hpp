#pragma once

#include "strongpack/composition.hpp"
#include "strongpack/digraph.hpp"
#include "strongpack/errors.hpp"
#include "strongpack/exact.hpp"
#include "strongpack/generators.hpp"
#include "strongpack/hamilton.hpp"
#include "strongpack/io.hpp"
#include "strongpack/packing.hpp"
#include "strongpack/packing_core.hpp"
#include "strongpack/reductions.hpp"
