#pragma once

#include "topoknit/error.hpp"
#include "topoknit/stitch.hpp"
#include "topoknit/pattern.hpp"
#include "topoknit/validate.hpp"
#include "topoknit/cn_grid.hpp"
#include "topoknit/evaluator.hpp"
#include "topoknit/topology_graph.hpp"
#include "topoknit/render.hpp"
#include "topoknit/oracle.hpp"
#include "topoknit/oracle_compare.hpp"
#include "topoknit/invariants.hpp"
#include "topoknit/random_suite.hpp"
#include "topoknit/bench.hpp"
