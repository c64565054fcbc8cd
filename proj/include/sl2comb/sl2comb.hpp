#pragma once

#include "dissection.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "render.hpp"
#include "solvers.hpp"
#include "verify.hpp"
#include "word.hpp"
#include "words.hpp"
