#pragma once

#include "infraball/rational.hpp"
#include "infraball/monomial.hpp"
#include "infraball/scalar_poly.hpp"
#include "infraball/qpoly.hpp"
#include "infraball/json_io.hpp"
#include "infraball/cr_ops.hpp"
#include "infraball/legendre.hpp"
#include "infraball/harmonics.hpp"
#include "infraball/linalg.hpp"
#include "infraball/basis.hpp"
#include "infraball/table_data.hpp"
#include "infraball/text_render.hpp"
#include "infraball/fourier.hpp"
#include "infraball/report.hpp"
