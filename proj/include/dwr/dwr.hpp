#pragma once

// Umbrella header.

#include "dwr/blocks.hpp"
#include "dwr/bounds.hpp"
#include "dwr/builtins.hpp"
#include "dwr/complex_matrix.hpp"
#include "dwr/eig.hpp"
#include "dwr/errors.hpp"
#include "dwr/matrix_io.hpp"
#include "dwr/oracles.hpp"
#include "dwr/quantities.hpp"
#include "dwr/random_inputs.hpp"
#include "dwr/report.hpp"
