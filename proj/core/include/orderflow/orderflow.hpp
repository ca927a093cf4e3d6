#pragma once

#include "orderflow/codes.hpp"
#include "orderflow/config.hpp"
#include "orderflow/ergodic.hpp"
#include "orderflow/error.hpp"
#include "orderflow/orders.hpp"
#include "orderflow/perm.hpp"
#include "orderflow/ramsey.hpp"
#include "orderflow/rational.hpp"
#include "orderflow/text_io.hpp"
