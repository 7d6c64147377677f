#pragma once

// Umbrella header for the whole toolkit.

#include "synchro/automaton.hpp"
#include "synchro/bitset.hpp"
#include "synchro/classify.hpp"
#include "synchro/clique.hpp"
#include "synchro/coloring.hpp"
#include "synchro/endomorphism.hpp"
#include "synchro/errors.hpp"
#include "synchro/experiment.hpp"
#include "synchro/fixtures.hpp"
#include "synchro/graph.hpp"
#include "synchro/groups.hpp"
#include "synchro/io.hpp"
#include "synchro/multiset.hpp"
#include "synchro/perm_group.hpp"
#include "synchro/permutation.hpp"
#include "synchro/rational.hpp"
#include "synchro/reset_bounds.hpp"
#include "synchro/rng.hpp"
#include "synchro/transformation.hpp"
#include "synchro/witnesses.hpp"
