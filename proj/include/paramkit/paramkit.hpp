#pragma once

#include "paramkit/error.hpp"
#include "paramkit/field.hpp"
#include "paramkit/monomial.hpp"
#include "paramkit/polynomial.hpp"
#include "paramkit/parser.hpp"
#include "paramkit/groebner.hpp"
#include "paramkit/ideal_ops.hpp"
#include "paramkit/matrix.hpp"
#include "paramkit/limit_closure.hpp"
#include "paramkit/koszul.hpp"
#include "paramkit/criteria.hpp"
#include "paramkit/session.hpp"
#include "paramkit/scenario.hpp"
