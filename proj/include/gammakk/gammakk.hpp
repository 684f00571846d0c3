#pragma once

#include "gammakk/complex.hpp"
#include "gammakk/decorated.hpp"
#include "gammakk/errors.hpp"
#include "gammakk/gamma_complexes.hpp"
#include "gammakk/homology.hpp"
#include "gammakk/io.hpp"
#include "gammakk/models.hpp"
#include "gammakk/permstats.hpp"
#include "gammakk/polynomial.hpp"
#include "gammakk/vectors.hpp"
#include "gammakk/verify.hpp"
