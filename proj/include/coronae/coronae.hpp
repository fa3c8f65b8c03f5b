#pragma once

#include "coronae/coronal.hpp"
#include "coronae/errors.hpp"
#include "coronae/graph.hpp"
#include "coronae/isospectral.hpp"
#include "coronae/linalg.hpp"
#include "coronae/polynomial.hpp"
#include "coronae/products.hpp"
#include "coronae/spectrum.hpp"
#include "coronae/theorems.hpp"
