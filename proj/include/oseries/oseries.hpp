#pragma once

#include "oseries/combinatorics.hpp"
#include "oseries/error.hpp"
#include "oseries/series.hpp"
#include "oseries/hasse.hpp"
#include "oseries/poset.hpp"
#include "oseries/oracle.hpp"
#include "oseries/generate.hpp"
#include "oseries/hstar.hpp"
#include "oseries/inverse.hpp"
#include "oseries/identities.hpp"
#include "oseries/probability.hpp"
