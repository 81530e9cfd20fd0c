#pragma once

#include "tarzan/bench.hpp"
#include "tarzan/explore.hpp"
#include "tarzan/kinematics.hpp"
#include "tarzan/model.hpp"
#include "tarzan/network.hpp"
#include "tarzan/oracle.hpp"
#include "tarzan/region.hpp"
#include "tarzan/textio.hpp"
