#pragma once

#include "nazeta/curve.hpp"
#include "nazeta/point_count.hpp"

namespace fixtures {

using namespace nazeta;

inline CurveData projective_line(long q) { return ingest_weil(q, 0, {Integer(1)}, "P1"); }

// y^2 + y = x^3 over F_2
inline CurveData elliptic_f2() { return ingest_weil(2, 1, {1, 0, 2}, "E"); }

// y^2 + y = x^5 over F_2
inline CurveData genus2_f2() { return ingest_weil(2, 2, {1, 0, 0, 0, 4}, "C2"); }

inline RationalFunction t_var() { return RationalFunction::monomial(Rational(1), 1); }

inline RationalFunction constant(const Rational& c) { return RationalFunction(c); }

}  // namespace fixtures
