#pragma once

// Umbrella header for the subspace-evasive set toolkit.

#include "evasive/errors.hpp"
#include "evasive/evasive_set.hpp"
#include "evasive/field.hpp"
#include "evasive/intersect.hpp"
#include "evasive/io.hpp"
#include "evasive/linalg.hpp"
#include "evasive/listdec.hpp"
#include "evasive/params.hpp"
#include "evasive/poly.hpp"
#include "evasive/rational.hpp"
#include "evasive/rng.hpp"
#include "evasive/variety.hpp"
#include "evasive/verify.hpp"
