#pragma once

#include "matrix.hpp"
#include "eig.hpp"
#include "spin_model.hpp"
#include "rindler.hpp"
#include "teleport.hpp"
#include "measures.hpp"
#include "quadrature.hpp"
#include "sweep.hpp"
#include "validate.hpp"
