#pragma once

// umbrella header: first-diagonal Eulerian magnitude homology toolkit

#include "emh/bench.hpp"
#include "emh/boundary.hpp"
#include "emh/chain.hpp"
#include "emh/enumerate.hpp"
#include "emh/errors.hpp"
#include "emh/generators.hpp"
#include "emh/graph.hpp"
#include "emh/homology.hpp"
#include "emh/io.hpp"
#include "emh/oracle.hpp"
#include "emh/rank.hpp"
#include "emh/report.hpp"
#include "emh/run.hpp"
#include "emh/trail.hpp"
#include "emh/witness.hpp"
