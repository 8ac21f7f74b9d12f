#pragma once

#include "ratfourier/coefficients.hpp"
#include "ratfourier/errors.hpp"
#include "ratfourier/oracle.hpp"
#include "ratfourier/params.hpp"
#include "ratfourier/presets.hpp"
#include "ratfourier/quadrature.hpp"
#include "ratfourier/rational_eval.hpp"
#include "ratfourier/targets.hpp"
#include "ratfourier/trig_identity.hpp"
#include "ratfourier/voigt.hpp"
