#pragma once

#include "verlab/arith.hpp"
#include "verlab/charlab.hpp"
#include "verlab/decompose.hpp"
#include "verlab/error.hpp"
#include "verlab/fusion.hpp"
#include "verlab/growth.hpp"
#include "verlab/padix.hpp"
#include "verlab/tiltring.hpp"
#include "verlab/verpn.hpp"
