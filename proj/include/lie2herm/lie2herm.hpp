#pragma once

// Umbrella header.

#include "lie2herm/algebra.hpp"
#include "lie2herm/catalog.hpp"
#include "lie2herm/decomposition.hpp"
#include "lie2herm/errors.hpp"
#include "lie2herm/geometry.hpp"
#include "lie2herm/hermitian.hpp"
#include "lie2herm/io.hpp"
#include "lie2herm/kform.hpp"
#include "lie2herm/linalg.hpp"
#include "lie2herm/tolerance.hpp"
