#pragma once

// Umbrella header.

#include "hopfgraph/algebra.hpp"
#include "hopfgraph/analysis.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/checker.hpp"
#include "hopfgraph/coproduct.hpp"
#include "hopfgraph/dsl.hpp"
#include "hopfgraph/emit.hpp"
#include "hopfgraph/enumerate.hpp"
#include "hopfgraph/errors.hpp"
#include "hopfgraph/generator.hpp"
#include "hopfgraph/graph.hpp"
#include "hopfgraph/partition.hpp"
#include "hopfgraph/poset.hpp"
#include "hopfgraph/rational.hpp"
#include "hopfgraph/tensor.hpp"
