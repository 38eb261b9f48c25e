#pragma once

#include "lamb/bohm.hpp"
#include "lamb/central.hpp"
#include "lamb/cl.hpp"
#include "lamb/compare.hpp"
#include "lamb/delem.hpp"
#include "lamb/error.hpp"
#include "lamb/graph_interp.hpp"
#include "lamb/parse.hpp"
#include "lamb/print.hpp"
#include "lamb/reduce.hpp"
#include "lamb/rel_interp.hpp"
#include "lamb/term.hpp"
#include "lamb/web.hpp"
