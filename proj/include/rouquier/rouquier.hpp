#pragma once

#include "blocks.hpp"
#include "builtins.hpp"
#include "catalog.hpp"
#include "constructible.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "numtheory.hpp"
#include "schur.hpp"
#include "symbols.hpp"
#include "validate.hpp"
#include "valuation.hpp"
