#pragma once

// Umbrella header.

#include "hopflab/error.hpp"
#include "hopflab/field.hpp"
#include "hopflab/fracpoly.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/intpoly.hpp"
#include "hopflab/witt.hpp"
#include "hopflab/trunc.hpp"
#include "hopflab/report.hpp"
#include "hopflab/linalg.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/galois.hpp"
#include "hopflab/dual.hpp"
#include "hopflab/isotest.hpp"
#include "hopflab/serialize.hpp"
#include "hopflab/suite.hpp"
