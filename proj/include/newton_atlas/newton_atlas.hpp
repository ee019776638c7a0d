#pragma once

// Umbrella header.
#include "errors.hpp"
#include "rational.hpp"
#include "univariate.hpp"
#include "bivariate.hpp"
#include "automorphism.hpp"
#include "parser.hpp"
#include "roots.hpp"
#include "real_roots.hpp"
#include "resultant.hpp"
#include "geometry.hpp"
#include "value_set.hpp"
#include "faces.hpp"
#include "bifurcation.hpp"
#include "family.hpp"
#include "report.hpp"
