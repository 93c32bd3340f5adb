#pragma once

#include "flowsched/bounds.hpp"
#include "flowsched/exact.hpp"
#include "flowsched/generators.hpp"
#include "flowsched/io.hpp"
#include "flowsched/max_flow.hpp"
#include "flowsched/network.hpp"
#include "flowsched/solve.hpp"
#include "flowsched/sp.hpp"
#include "flowsched/structure.hpp"
#include "flowsched/uniform.hpp"
