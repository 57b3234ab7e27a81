#pragma once

// Convenience umbrella: the whole library except the CLI front end.

#include "redheffer/chains.hpp"
#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"
#include "redheffer/numtheory.hpp"
#include "redheffer/poset.hpp"
#include "redheffer/poset_json.hpp"
#include "redheffer/random_poset.hpp"
#include "redheffer/redheffer_matrix.hpp"
