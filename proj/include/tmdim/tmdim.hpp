#pragma once

#include "tmdim/conformality.hpp"
#include "tmdim/dimension.hpp"
#include "tmdim/linalg.hpp"
#include "tmdim/mesh.hpp"
#include "tmdim/meshgen.hpp"
#include "tmdim/oracle.hpp"
#include "tmdim/rational.hpp"
#include "tmdim/reduce.hpp"
#include "tmdim/report.hpp"
#include "tmdim/spec.hpp"
#include "tmdim/svg.hpp"
#include "tmdim/topology.hpp"
