#pragma once

#include "census.hpp"
#include "io.hpp"
#include "multigraph.hpp"
#include "orientation.hpp"
#include "rational.hpp"
#include "reductions.hpp"
#include "reliability.hpp"
#include "tutte.hpp"
