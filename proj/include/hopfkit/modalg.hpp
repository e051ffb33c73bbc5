#pragma once

#include "hopfkit/modalg/module_algebra.hpp"
#include "hopfkit/modalg/theorems.hpp"
