#pragma once

#include "hopfkit/hopf/catalog.hpp"
#include "hopfkit/hopf/hopf.hpp"
#include "hopfkit/hopf/ni89b.hpp"
