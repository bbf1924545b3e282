#pragma once

#include "base_colouring.hpp"
#include "colouring.hpp"
#include "distinguisher.hpp"
#include "exact_solver.hpp"
#include "experiment.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "ordering.hpp"
#include "params.hpp"
#include "verifier.hpp"
