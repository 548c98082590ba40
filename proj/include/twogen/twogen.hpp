#pragma once

#include "twogen/arith.hpp"
#include "twogen/constructions.hpp"
#include "twogen/group.hpp"
#include "twogen/recipe.hpp"
#include "twogen/selftest.hpp"
#include "twogen/serialize.hpp"
#include "twogen/verifier.hpp"
