// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "anf.hpp"
#include "boolean_function.hpp"
#include "distributions.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "nonlinearity.hpp"
#include "optimal.hpp"
#include "sbox.hpp"
#include "subspaces.hpp"
#include "walsh.hpp"
#include "reference_tables.hpp"
