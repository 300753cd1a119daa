#pragma once

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/coxeter_matrix.hpp"
#include "coxhecke/delta.hpp"
#include "coxhecke/errors.hpp"
#include "coxhecke/gamma.hpp"
#include "coxhecke/gen_subset.hpp"
#include "coxhecke/group_spec.hpp"
#include "coxhecke/hecke_element.hpp"
#include "coxhecke/hecke_generic.hpp"
#include "coxhecke/hecke_zero.hpp"
#include "coxhecke/linalg.hpp"
#include "coxhecke/parabolic.hpp"
#include "coxhecke/poly.hpp"
#include "coxhecke/rational.hpp"
#include "coxhecke/reps_traces.hpp"
#include "coxhecke/verify.hpp"
