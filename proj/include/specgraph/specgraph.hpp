#pragma once

#include "specgraph/analysis.hpp"
#include "specgraph/census.hpp"
#include "specgraph/classify.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/report.hpp"
#include "specgraph/spectral.hpp"
