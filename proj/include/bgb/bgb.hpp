#pragma once

#include "affine.hpp"
#include "buchberger.hpp"
#include "f5.hpp"
#include "field.hpp"
#include "hilbert.hpp"
#include "linalg.hpp"
#include "macaulay.hpp"
#include "minors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "system.hpp"
