#ifndef LSS_LSS_HPP
#define LSS_LSS_HPP

#include "lss/bigint.hpp"
#include "lss/builders.hpp"
#include "lss/decomp.hpp"
#include "lss/field.hpp"
#include "lss/gbasis.hpp"
#include "lss/graph.hpp"
#include "lss/groebner.hpp"
#include "lss/json_io.hpp"
#include "lss/monomial.hpp"
#include "lss/monomial_ideal.hpp"
#include "lss/polynomial.hpp"
#include "lss/rational.hpp"
#include "lss/variety.hpp"

#endif
