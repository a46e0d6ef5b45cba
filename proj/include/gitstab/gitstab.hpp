// Umbrella header.

#pragma once

#include "gitstab/balance.hpp"
#include "gitstab/curve_class.hpp"
#include "gitstab/curve_graph.hpp"
#include "gitstab/enumeration.hpp"
#include "gitstab/git_decision.hpp"
#include "gitstab/io.hpp"
