#pragma once

#include "arc.hpp"
#include "crossing.hpp"
#include "dynamics.hpp"
#include "exchange_graph.hpp"
#include "lift.hpp"
#include "quiver.hpp"
#include "rational.hpp"
#include "surface.hpp"
#include "triangulation.hpp"
