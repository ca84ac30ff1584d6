#pragma once

// Umbrella header.

#include "drep/error.hpp"
#include "drep/rational.hpp"
#include "drep/complex.hpp"
#include "drep/homology.hpp"
#include "drep/collapse.hpp"
#include "drep/lp.hpp"
#include "drep/geometry.hpp"
#include "drep/graph.hpp"
#include "drep/planarity.hpp"
#include "drep/representability.hpp"
#include "drep/config_space.hpp"
#include "drep/report.hpp"
#include "drep/io.hpp"
#include "drep/serialize.hpp"
#include "drep/svg.hpp"
