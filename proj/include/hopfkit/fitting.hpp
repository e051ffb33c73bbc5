#pragma once

#include "hopfkit/fitting/fitting.hpp"
