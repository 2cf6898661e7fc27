#pragma once

#include "walkcert/rational.hpp"
#include "walkcert/graph.hpp"
#include "walkcert/polynomial.hpp"
#include "walkcert/univariate.hpp"
#include "walkcert/newton.hpp"
#include "walkcert/spectral.hpp"
#include "walkcert/inequality.hpp"
#include "walkcert/certificates.hpp"
#include "walkcert/search.hpp"
#include "walkcert/json_io.hpp"
