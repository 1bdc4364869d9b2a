#pragma once

/// Umbrella header: the whole library in one include.

#include "cone.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "lift.hpp"
#include "oracle.hpp"
#include "pseudomatrix.hpp"
#include "rational.hpp"
#include "tanner.hpp"
