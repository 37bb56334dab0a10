#pragma once

#include "sierdom/assignment.hpp"
#include "sierdom/bounds.hpp"
#include "sierdom/brute_force.hpp"
#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/graph_io.hpp"
#include "sierdom/independence.hpp"
#include "sierdom/lifts.hpp"
#include "sierdom/sierpinski.hpp"
#include "sierdom/solver.hpp"
#include "sierdom/verify.hpp"
