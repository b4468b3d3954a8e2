#ifndef BELLSIM_BELLSIM_HPP
#define BELLSIM_BELLSIM_HPP

// Umbrella header: exact simulation of passive linear-optical Bell-state
// measurement schemes over the field Q(i, sqrt2).

#include "bellsim/amplitude.hpp"
#include "bellsim/discrimination.hpp"
#include "bellsim/fock.hpp"
#include "bellsim/imperfections.hpp"
#include "bellsim/interferometer.hpp"
#include "bellsim/rational.hpp"
#include "bellsim/schemes.hpp"
#include "bellsim/serialize.hpp"
#include "bellsim/verification.hpp"

#endif
