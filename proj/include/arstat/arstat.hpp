#ifndef ARSTAT_ARSTAT_HPP
#define ARSTAT_ARSTAT_HPP

#include "arstat/algebra.hpp"
#include "arstat/bargmann.hpp"
#include "arstat/bessel.hpp"
#include "arstat/coherent.hpp"
#include "arstat/combinatorics.hpp"
#include "arstat/fock.hpp"
#include "arstat/linalg.hpp"
#include "arstat/measures.hpp"
#include "arstat/params.hpp"
#include "arstat/quadrature.hpp"
#include "arstat/report.hpp"
#include "arstat/uncertainty.hpp"

#endif  // ARSTAT_ARSTAT_HPP
