#pragma once

#include "fdcalc/casorati.hpp"
#include "fdcalc/diffcalc.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/factored.hpp"
#include "fdcalc/field.hpp"
#include "fdcalc/parser.hpp"
#include "fdcalc/poly.hpp"
#include "fdcalc/random.hpp"
#include "fdcalc/shiftcalc.hpp"
#include "fdcalc/theorems.hpp"
