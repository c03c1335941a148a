#pragma once

namespace mrispeech {

/// Floor substituted for 10*log10(0) everywhere a power is shown in dB.
inline constexpr double kDbFloor = -200.0;

/// 10*log10(power), clamped to kDbFloor.
double power_to_db(double power);

double db_to_power(double db);

/// Signed distance 12*log2(f_test / f_ref) in semitones. Throws
/// DomainError when either frequency is not strictly positive.
double semitone_distance(double f_test, double f_ref);

}  // namespace mrispeech
