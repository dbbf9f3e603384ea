#pragma once

#include "qext/bounds.hpp"
#include "qext/constructions.hpp"
#include "qext/enumeration.hpp"
#include "qext/graph.hpp"
#include "qext/report.hpp"
#include "qext/search.hpp"
#include "qext/spectral.hpp"
#include "qext/subgraph_search.hpp"
#include "qext/verify.hpp"
