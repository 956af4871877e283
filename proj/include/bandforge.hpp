#pragma once

/// bandforge: a nearly flat convex prismatoid whose side band unfolds flat,
/// yet leaves the top face no overlap-free place to land.
///
/// The library builds the solid (a bulged-triangle hexagon over its uniformly
/// offset copy), measures its rim curvatures, develops the six-face side band
/// into the plane at every lateral-edge cut, attaches the top hexagon at
/// every rim edge, and certifies the overlap verdict for all 36 combinations.

#include "bandforge/tolerances.hpp"
#include "bandforge/errors.hpp"
#include "bandforge/vec.hpp"
#include "bandforge/polygon.hpp"
#include "bandforge/clip.hpp"
#include "bandforge/montecarlo.hpp"
#include "bandforge/isometry.hpp"
#include "bandforge/prismatoid.hpp"
#include "bandforge/develop.hpp"
#include "bandforge/verifier.hpp"
#include "bandforge/render.hpp"
#include "bandforge/report.hpp"
#include "bandforge/presets.hpp"
