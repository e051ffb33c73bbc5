#pragma once

#include "hopfkit/exactla/echelon.hpp"
#include "hopfkit/exactla/field.hpp"
#include "hopfkit/exactla/generic_det.hpp"
#include "hopfkit/exactla/gf.hpp"
#include "hopfkit/exactla/matrix.hpp"
#include "hopfkit/exactla/poly.hpp"
#include "hopfkit/exactla/rational.hpp"
#include "hopfkit/exactla/subspace.hpp"
