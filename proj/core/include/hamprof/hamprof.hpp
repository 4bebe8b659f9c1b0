#pragma once

// Umbrella header.

#include "hamprof/bench.hpp"
#include "hamprof/error.hpp"
#include "hamprof/io.hpp"
#include "hamprof/oracle.hpp"
#include "hamprof/pattern.hpp"
#include "hamprof/profile.hpp"
#include "hamprof/scan.hpp"
