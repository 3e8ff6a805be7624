#pragma once

#include "kerov/approximation.hpp"
#include "kerov/arithmetic.hpp"
#include "kerov/diagram.hpp"
#include "kerov/experiments.hpp"
#include "kerov/growth.hpp"
#include "kerov/measure.hpp"
#include "kerov/metric.hpp"
#include "kerov/partition.hpp"
#include "kerov/rng.hpp"
#include "kerov/shift.hpp"
#include "kerov/transition.hpp"
#include "kerov/zigzag.hpp"
