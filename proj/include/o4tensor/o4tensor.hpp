#pragma once

// Umbrella header: pulls in the whole library.

#include <o4tensor/clebsch_gordan.hpp>
#include <o4tensor/conventions.hpp>
#include <o4tensor/exact_complex.hpp>
#include <o4tensor/half_int.hpp>
#include <o4tensor/irrep_oracle.hpp>
#include <o4tensor/json_io.hpp>
#include <o4tensor/matrix.hpp>
#include <o4tensor/numeric.hpp>
#include <o4tensor/o4_generators.hpp>
#include <o4tensor/radical.hpp>
#include <o4tensor/recurrence.hpp>
#include <o4tensor/reference_forms.hpp>
#include <o4tensor/verify.hpp>
