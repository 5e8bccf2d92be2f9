// perdist.hpp
// Umbrella header for the whole library.

#pragma once

#include "perdist/lattice.hpp"
#include "perdist/field.hpp"
#include "perdist/trace.hpp"
#include "perdist/cones.hpp"
#include "perdist/window.hpp"
#include "perdist/closed_forms.hpp"
#include "perdist/product.hpp"
#include "perdist/compat.hpp"
#include "perdist/distributions.hpp"
#include "perdist/wavefront.hpp"
#include "perdist/shiftinv.hpp"
#include "perdist/io.hpp"
