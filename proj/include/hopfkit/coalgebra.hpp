#pragma once

#include "hopfkit/coalgebra/coalgebra.hpp"
#include "hopfkit/coalgebra/comodule.hpp"
