#pragma once

#include "plumbtau/errors.hpp"
#include "plumbtau/exact_linalg.hpp"
#include "plumbtau/floer_complex.hpp"
#include "plumbtau/obstructions.hpp"
#include "plumbtau/plumbing_lattice.hpp"
#include "plumbtau/surgery_calculus.hpp"
#include "plumbtau/tau_lattice.hpp"
#include "plumbtau/catalog.hpp"
