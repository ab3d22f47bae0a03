#pragma once

// Umbrella header.

#include "tfc/coding.hpp"
#include "tfc/coding_pair.hpp"
#include "tfc/condition.hpp"
#include "tfc/encodings.hpp"
#include "tfc/error.hpp"
#include "tfc/forcing_ops.hpp"
#include "tfc/generate.hpp"
#include "tfc/hechler.hpp"
#include "tfc/ideals.hpp"
#include "tfc/real.hpp"
#include "tfc/schedule.hpp"
#include "tfc/word.hpp"
