#pragma once

#include "uavwpt/error.hpp"
#include "uavwpt/units.hpp"
#include "uavwpt/numerics/elliptic.hpp"
#include "uavwpt/numerics/quadrature.hpp"
#include "uavwpt/numerics/roots.hpp"
#include "uavwpt/numerics/tolerance.hpp"
#include "uavwpt/coil/coil.hpp"
#include "uavwpt/coil/presets.hpp"
#include "uavwpt/coupling/coupling.hpp"
#include "uavwpt/coupling/neumann.hpp"
#include "uavwpt/coupling/pose.hpp"
#include "uavwpt/link/efficiency_map.hpp"
#include "uavwpt/link/link.hpp"
#include "uavwpt/link/tuning.hpp"
#include "uavwpt/io/compare.hpp"
#include "uavwpt/io/csv.hpp"
#include "uavwpt/io/touchstone.hpp"
#include "uavwpt/io/two_port.hpp"
#include "uavwpt/mission/datasets.hpp"
#include "uavwpt/mission/mission.hpp"
#include "uavwpt/sustainability/gwp.hpp"
