#pragma once

#include "clusterkit/permutation.hpp"
#include "clusterkit/patterns.hpp"
#include "clusterkit/heap.hpp"
#include "clusterkit/decomposition.hpp"
#include "clusterkit/diamond.hpp"
#include "clusterkit/poly.hpp"
#include "clusterkit/series.hpp"
#include "clusterkit/rational_gf.hpp"
#include "clusterkit/transforms.hpp"
#include "clusterkit/recurrence.hpp"
#include "clusterkit/lattice_path.hpp"
#include "clusterkit/catalog.hpp"
#include "clusterkit/enumerate.hpp"
#include "clusterkit/tables.hpp"
