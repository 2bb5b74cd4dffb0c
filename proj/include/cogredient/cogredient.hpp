#pragma once

#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"
#include "cogredient/matrix.hpp"
#include "cogredient/reduction.hpp"
#include "cogredient/oracle.hpp"
#include "cogredient/sampling.hpp"
#include "cogredient/document.hpp"
