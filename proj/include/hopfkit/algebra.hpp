#pragma once

#include "hopfkit/algebra/algebra.hpp"
#include "hopfkit/algebra/modprops.hpp"
#include "hopfkit/algebra/module.hpp"
#include "hopfkit/algebra/opsimple.hpp"
#include "hopfkit/algebra/radical.hpp"
#include "hopfkit/algebra/wedderburn.hpp"
