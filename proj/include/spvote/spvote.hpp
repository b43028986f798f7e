#pragma once

#include "spvote/combinatorics.hpp"
#include "spvote/error.hpp"
#include "spvote/model.hpp"
#include "spvote/probability.hpp"
#include "spvote/rational.hpp"
#include "spvote/report.hpp"
#include "spvote/rng.hpp"
#include "spvote/samplers.hpp"
#include "spvote/soc.hpp"
#include "spvote/special_functions.hpp"
#include "spvote/stats.hpp"
#include "spvote/vote.hpp"
