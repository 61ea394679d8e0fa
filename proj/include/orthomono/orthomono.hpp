#pragma once

#include "orthomono/error.hpp"
#include "orthomono/field.hpp"
#include "orthomono/poly.hpp"
#include "orthomono/matrix.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/subgroups.hpp"
#include "orthomono/modrep.hpp"
#include "orthomono/monomial.hpp"
#include "orthomono/wreath.hpp"
#include "orthomono/sweep.hpp"
#include "orthomono/io.hpp"
