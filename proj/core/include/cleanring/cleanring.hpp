#pragma once

#include "cleanring/axioms.hpp"
#include "cleanring/cleanness.hpp"
#include "cleanring/constructors.hpp"
#include "cleanring/element_set.hpp"
#include "cleanring/error.hpp"
#include "cleanring/gf2_matrix.hpp"
#include "cleanring/mixed_radix.hpp"
#include "cleanring/ring.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
