#pragma once

#include "hx/chain.hpp"
#include "hx/complex.hpp"
#include "hx/ext_operator.hpp"
#include "hx/field.hpp"
#include "hx/homology.hpp"
#include "hx/hypergraph.hpp"
#include "hx/io.hpp"
#include "hx/koszul.hpp"
#include "hx/matrix.hpp"
#include "hx/mayer_vietoris.hpp"
#include "hx/persistence.hpp"
#include "hx/random.hpp"
#include "hx/report.hpp"
