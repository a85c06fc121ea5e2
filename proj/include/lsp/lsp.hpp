#pragma once

// Umbrella header for the weighted last-success stopping library.

#include "lsp/errors.hpp"
#include "lsp/extended_real.hpp"
#include "lsp/families.hpp"
#include "lsp/instance.hpp"
#include "lsp/io.hpp"
#include "lsp/monotonicity.hpp"
#include "lsp/montecarlo.hpp"
#include "lsp/numeric.hpp"
#include "lsp/odds.hpp"
#include "lsp/oracle.hpp"
#include "lsp/rational.hpp"
#include "lsp/session.hpp"
#include "lsp/solver.hpp"

namespace lsp {
inline constexpr const char* kVersion = "0.1.0";
}
