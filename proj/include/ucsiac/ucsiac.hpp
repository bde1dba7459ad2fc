#pragma once

#include "ucsiac/error.hpp"
#include "ucsiac/limits.hpp"
#include "ucsiac/field.hpp"
#include "ucsiac/matrix.hpp"
#include "ucsiac/subspace.hpp"
#include "ucsiac/module.hpp"
#include "ucsiac/algebra.hpp"
#include "ucsiac/isomorphism.hpp"
#include "ucsiac/pc_group.hpp"
#include "ucsiac/duality.hpp"
#include "ucsiac/standard.hpp"
#include "ucsiac/esq.hpp"
#include "ucsiac/sec6.hpp"
#include "ucsiac/polymod.hpp"
