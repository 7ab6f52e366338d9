#pragma once

#include "lipteich/annulus.hpp"
#include "lipteich/error.hpp"
#include "lipteich/estimate.hpp"
#include "lipteich/holonomy.hpp"
#include "lipteich/hypkernel.hpp"
#include "lipteich/io.hpp"
#include "lipteich/metrics.hpp"
#include "lipteich/topology.hpp"
