#pragma once

// Umbrella header for the whole library.

#include "chem.hpp"       // IWYU pragma: export
#include "crn.hpp"        // IWYU pragma: export
#include "csv.hpp"        // IWYU pragma: export
#include "dot.hpp"        // IWYU pragma: export
#include "errors.hpp"     // IWYU pragma: export
#include "fixtures.hpp"   // IWYU pragma: export
#include "hypergraph.hpp" // IWYU pragma: export
#include "ids.hpp"        // IWYU pragma: export
#include "incidence.hpp"  // IWYU pragma: export
#include "serialize.hpp"  // IWYU pragma: export
