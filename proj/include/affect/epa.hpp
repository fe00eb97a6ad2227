#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affect {

// Base error for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input file is malformed; the message names the file and,
// where possible, the offending line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Nominal bound of the survey scale per dimension. Estimated entries may
// exceed it; they are flagged, never clamped.
inline constexpr double kEpaScaleLimit = 4.3;

// A point in Evaluation/Potency/Activity space.
struct EpaVector {
  double e = 0.0;
  double p = 0.0;
  double a = 0.0;

  bool is_finite() const {
    return std::isfinite(e) && std::isfinite(p) && std::isfinite(a);
  }

  bool in_nominal_range() const {
    return std::fabs(e) <= kEpaScaleLimit && std::fabs(p) <= kEpaScaleLimit &&
           std::fabs(a) <= kEpaScaleLimit;
  }

  double operator[](int i) const { return i == 0 ? e : (i == 1 ? p : a); }
  double& operator[](int i) { return i == 0 ? e : (i == 1 ? p : a); }

  friend bool operator==(const EpaVector&, const EpaVector&) = default;
};

inline double euclidean_distance(const EpaVector& x, const EpaVector& y) {
  const double de = x.e - y.e, dp = x.p - y.p, da = x.a - y.a;
  return std::sqrt(de * de + dp * dp + da * da);
}

enum class Kind { identity, behavior, modifier, emoji };
enum class Provenance { surveyed, estimated };

std::string_view to_string(Kind kind);
std::string_view to_string(Provenance provenance);
Kind kind_from_string(std::string_view text);
Provenance provenance_from_string(std::string_view text);

}  // namespace affect
