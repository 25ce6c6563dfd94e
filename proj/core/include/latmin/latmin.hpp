#ifndef LATMIN_LATMIN_HPP
#define LATMIN_LATMIN_HPP

#include "latmin/assembly.hpp"
#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/green.hpp"
#include "latmin/lattice.hpp"
#include "latmin/minimize.hpp"
#include "latmin/modular.hpp"
#include "latmin/objective.hpp"
#include "latmin/series.hpp"
#include "latmin/uhp.hpp"
#include "latmin/verify.hpp"

#endif
