#pragma once

// Umbrella header.

#include "enumerate.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "genfun.hpp"
#include "ints.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "poly.hpp"
#include "statistics.hpp"
#include "verify.hpp"
#include "word.hpp"
