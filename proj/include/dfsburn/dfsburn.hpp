#pragma once

#include "bijection.hpp"
#include "budget.hpp"
#include "checks.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "parking.hpp"
#include "threshold.hpp"
#include "trees.hpp"
#include "tutte.hpp"
