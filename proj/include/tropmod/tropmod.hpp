#pragma once

// Umbrella header.
#include "tropmod/abstract_trop.hpp"
#include "tropmod/automorphism.hpp"
#include "tropmod/canonical.hpp"
#include "tropmod/enumeration.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/homology.hpp"
#include "tropmod/moduli_complex.hpp"
#include "tropmod/plane_trop.hpp"
#include "tropmod/rational.hpp"
