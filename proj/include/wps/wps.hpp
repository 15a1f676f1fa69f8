#pragma once

#include "wps/errors.hpp"
#include "wps/finite_field.hpp"
#include "wps/weights.hpp"
#include "wps/weighted_space.hpp"
#include "wps/weighted_poly.hpp"
#include "wps/delorme.hpp"
#include "wps/parallel.hpp"
#include "wps/zero_sets.hpp"
#include "wps/plane_lines.hpp"
#include "wps/wprm_codes.hpp"
#include "wps/verify.hpp"
