#pragma once

#include "equichroma/brute_force.hpp"
#include "equichroma/coloring.hpp"
#include "equichroma/families.hpp"
#include "equichroma/formulas.hpp"
#include "equichroma/graph.hpp"
#include "equichroma/graph_io.hpp"
#include "equichroma/rational.hpp"
#include "equichroma/solver.hpp"
#include "equichroma/stats.hpp"
#include "equichroma/verify.hpp"
