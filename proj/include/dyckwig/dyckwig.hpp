#pragma once

#include "dyck.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "oscillator.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "wigner.hpp"
