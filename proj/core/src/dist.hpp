#pragma once

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

namespace tzeff::dist {

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double student_t_cdf(double x, double df) {
  return boost::math::cdf(boost::math::students_t(df), x);
}

inline double student_t_two_sided_p(double t, double df) {
  return 2.0 * boost::math::cdf(boost::math::complement(boost::math::students_t(df),
                                                        std::abs(t)));
}

// P(F <= f) expressed through the sums of squares so that swapping the two
// samples maps p_lower <-> p_upper bit-for-bit.
inline double f_cdf_from_ssq(double ssq_num, double df_num, double ssq_den, double df_den) {
  double u = ssq_num / (ssq_num + ssq_den);
  return boost::math::ibeta(df_num / 2.0, df_den / 2.0, u);
}

}  // namespace tzeff::dist
