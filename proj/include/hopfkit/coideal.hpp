#pragma once

#include "hopfkit/coideal/coideal.hpp"
#include "hopfkit/coideal/theorems.hpp"
