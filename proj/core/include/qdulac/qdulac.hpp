#pragma once

#include "qdulac/error.hpp"
#include "qdulac/expand.hpp"
#include "qdulac/param_poly.hpp"
#include "qdulac/parser.hpp"
#include "qdulac/polygon.hpp"
#include "qdulac/qpoly.hpp"
#include "qdulac/rational.hpp"
#include "qdulac/roots.hpp"
#include "qdulac/series.hpp"
#include "qdulac/truncate.hpp"
#include "qdulac/upoly.hpp"
