#ifndef QALG_QALG_HPP
#define QALG_QALG_HPP

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/quadrature.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/core/series.hpp"
#include "qalg/elliptic.hpp"
#include "qalg/expressions.hpp"
#include "qalg/harness.hpp"
#include "qalg/identities.hpp"
#include "qalg/modular.hpp"
#include "qalg/moebius.hpp"
#include "qalg/qengine.hpp"
#include "qalg/recognizer.hpp"
#include "qalg/report.hpp"

#endif  // QALG_QALG_HPP
