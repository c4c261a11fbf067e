#pragma once

#include "tstates/baseline.hpp"
#include "tstates/bit_series.hpp"
#include "tstates/error.hpp"
#include "tstates/evaluation.hpp"
#include "tstates/matrix.hpp"
#include "tstates/meta_community.hpp"
#include "tstates/pipeline.hpp"
#include "tstates/report.hpp"
#include "tstates/series_similarity.hpp"
#include "tstates/synth.hpp"
#include "tstates/temporal_network.hpp"
#include "tstates/windowing.hpp"
