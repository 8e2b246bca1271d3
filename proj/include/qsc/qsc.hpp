#pragma once

// Umbrella header: exact-arithmetic toolkit for the quaternion lattice
// groups Gamma_{p,l} acting on products of trees.

#include "qsc/antitorus.hpp"
#include "qsc/arith.hpp"
#include "qsc/cosets.hpp"
#include "qsc/error.hpp"
#include "qsc/genset.hpp"
#include "qsc/membership.hpp"
#include "qsc/padic.hpp"
#include "qsc/presentation.hpp"
#include "qsc/quaternion.hpp"
#include "qsc/reference_data.hpp"
#include "qsc/relations.hpp"
#include "qsc/reproduce.hpp"
#include "qsc/so3.hpp"
#include "qsc/word.hpp"
