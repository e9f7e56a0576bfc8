#pragma once

#include "hapsnet/channel/fading.hpp"
#include "hapsnet/channel/pathloss.hpp"
#include "hapsnet/channel/realization.hpp"
#include "hapsnet/config.hpp"
#include "hapsnet/engine.hpp"
#include "hapsnet/error.hpp"
#include "hapsnet/figures.hpp"
#include "hapsnet/io/config_file.hpp"
#include "hapsnet/io/csv.hpp"
#include "hapsnet/io/manifest.hpp"
#include "hapsnet/power.hpp"
#include "hapsnet/run.hpp"
#include "hapsnet/schemes/rate.hpp"
#include "hapsnet/schemes/selection.hpp"
#include "hapsnet/schemes/sinr.hpp"
#include "hapsnet/schemes/types.hpp"
#include "hapsnet/units.hpp"
#include "hapsnet/validation.hpp"
