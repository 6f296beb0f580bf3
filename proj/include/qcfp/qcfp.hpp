#ifndef QCFP_QCFP_HPP
#define QCFP_QCFP_HPP

#include "qcfp/errors.hpp"
#include "qcfp/functions.hpp"
#include "qcfp/oracle.hpp"
#include "qcfp/point.hpp"
#include "qcfp/problem_io.hpp"
#include "qcfp/projection.hpp"
#include "qcfp/solver.hpp"
#include "qcfp/trace_io.hpp"
#include "qcfp/verify.hpp"

#endif  // QCFP_QCFP_HPP
