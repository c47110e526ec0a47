#pragma once

#include "purejump/aj.hpp"
#include "purejump/csv.hpp"
#include "purejump/experiments.hpp"
#include "purejump/mathutil.hpp"
#include "purejump/model.hpp"
#include "purejump/path.hpp"
#include "purejump/preaverage.hpp"
#include "purejump/rng.hpp"
#include "purejump/serialize.hpp"
#include "purejump/stable.hpp"
#include "purejump/teststat.hpp"
#include "purejump/ticks.hpp"
