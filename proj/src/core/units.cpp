#include "mrispeech/core/units.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mrispeech/core/error.hpp"

namespace mrispeech {

double power_to_db(double power) {
  if (!(power > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 10.0 * std::log10(power));
}

double db_to_power(double db) { return std::pow(10.0, db / 10.0); }

double semitone_distance(double f_test, double f_ref) {
  if (!(f_test > 0.0) || !(f_ref > 0.0)) {
    throw DomainError("semitone distance needs positive frequencies, got " + std::to_string(f_test) +
                      " and " + std::to_string(f_ref));
  }
  return 12.0 * std::log2(f_test / f_ref);
}

}  // namespace mrispeech
