#pragma once

#include "figlab/generate.hpp"
#include "figlab/io.hpp"
#include "figlab/report.hpp"
