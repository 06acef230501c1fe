#pragma once

#include "vdc/canonical.hpp"
#include "vdc/collapse.hpp"
#include "vdc/complex.hpp"
#include "vdc/constructions.hpp"
#include "vdc/degree_set.hpp"
#include "vdc/enumerate.hpp"
#include "vdc/error.hpp"
#include "vdc/face_list.hpp"
#include "vdc/graph_core.hpp"
#include "vdc/growth.hpp"
#include "vdc/reduction.hpp"
#include "vdc/shapes.hpp"
#include "vdc/tree_family.hpp"
#include "vdc/vertex_set.hpp"
#include "vdc/witness_io.hpp"
