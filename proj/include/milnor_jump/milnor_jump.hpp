#pragma once

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/deformation_jump.hpp"
#include "milnor_jump/diophantine.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/geometry.hpp"
#include "milnor_jump/json_io.hpp"
#include "milnor_jump/jump_algorithm.hpp"
#include "milnor_jump/lattice.hpp"
#include "milnor_jump/newton_number.hpp"
#include "milnor_jump/singularity.hpp"
#include "milnor_jump/verify.hpp"
