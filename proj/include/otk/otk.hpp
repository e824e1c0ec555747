#pragma once

// Umbrella header: exact order-type machinery, predicate encodings, the
// Ramsey-style builders, consistency analysis, and collision-free synthesis.

#include "otk/arrows.hpp"
#include "otk/builders.hpp"
#include "otk/colorings.hpp"
#include "otk/corpus.hpp"
#include "otk/dual.hpp"
#include "otk/error.hpp"
#include "otk/geometry.hpp"
#include "otk/lll.hpp"
#include "otk/local_consistency.hpp"
#include "otk/oriented_graph.hpp"
#include "otk/pair_function.hpp"
#include "otk/phi.hpp"
#include "otk/point_io.hpp"
#include "otk/point_set.hpp"
#include "otk/predicate_table.hpp"
#include "otk/psi.hpp"
#include "otk/rational.hpp"
#include "otk/refutation.hpp"
#include "otk/rng.hpp"
#include "otk/split.hpp"
