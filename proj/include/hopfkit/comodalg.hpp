#pragma once

#include "hopfkit/comodalg/comodule_algebra.hpp"
#include "hopfkit/comodalg/hopf_module.hpp"
#include "hopfkit/comodalg/theorems.hpp"
