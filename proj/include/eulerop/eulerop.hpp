#pragma once

#include "rational.hpp"
#include "polynomial.hpp"
#include "poly_matrix.hpp"
#include "sturm.hpp"
#include "bigfloat.hpp"
#include "indicial.hpp"
#include "hurwitz_layout.hpp"
#include "rootcount.hpp"
#include "hurwitz.hpp"
#include "thresholds.hpp"
#include "galois.hpp"
#include "frobenius.hpp"
#include "asymptotics.hpp"
#include "figure.hpp"
