#pragma once

#include "profscope/error.hpp"
#include "profscope/group.hpp"
#include "profscope/constructors.hpp"
#include "profscope/subgroup.hpp"
#include "profscope/homomorphism.hpp"
#include "profscope/lattice.hpp"
#include "profscope/json_io.hpp"
#include "profscope/tower.hpp"
#include "profscope/subspace.hpp"
#include "profscope/ordinal.hpp"
#include "profscope/classify.hpp"
#include "profscope/config.hpp"
