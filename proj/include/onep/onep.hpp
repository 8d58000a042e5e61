#pragma once

#include "onep/census.hpp"
#include "onep/constructions.hpp"
#include "onep/crossing_removal.hpp"
#include "onep/drawing.hpp"
#include "onep/graph.hpp"
#include "onep/io.hpp"
#include "onep/matching.hpp"
#include "onep/regions.hpp"
#include "onep/skeleton.hpp"
#include "onep/svg.hpp"
#include "onep/triangulator.hpp"
#include "onep/validate.hpp"
