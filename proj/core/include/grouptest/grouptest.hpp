#pragma once

#include "grouptest/canonical.hpp"
#include "grouptest/combinatorics.hpp"
#include "grouptest/evaluator.hpp"
#include "grouptest/family.hpp"
#include "grouptest/formulas.hpp"
#include "grouptest/instance.hpp"
#include "grouptest/report.hpp"
#include "grouptest/solver.hpp"
#include "grouptest/strategy.hpp"
#include "grouptest/value.hpp"
#include "grouptest/verify.hpp"
