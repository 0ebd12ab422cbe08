#pragma once

#include "graphbandit/config.hpp"
#include "graphbandit/env.hpp"
#include "graphbandit/errors.hpp"
#include "graphbandit/generators.hpp"
#include "graphbandit/graph.hpp"
#include "graphbandit/graphalgo.hpp"
#include "graphbandit/io.hpp"
#include "graphbandit/policies.hpp"
#include "graphbandit/rng.hpp"
#include "graphbandit/runner.hpp"
#include "graphbandit/stats.hpp"
