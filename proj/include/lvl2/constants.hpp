#pragma once

#include "lvl2/interval.hpp"

namespace lvl2 {

// Certified transcendental helpers at a fixed decimal precision.
class CertifiedConstants {
 public:
  explicit CertifiedConstants(unsigned digits);

  unsigned digits() const { return digits_; }
  // Contains Euler's number, width <= 10^-digits.
  const Interval& e() const { return e_; }
  // Outward enclosure of {sqrt(x) : x in iv}. The rounding adds at most a
  // relative 10^-digits on each side. Throws InvalidArgument unless iv > 0.
  Interval sqrt(const Interval& iv) const;

 private:
  unsigned digits_;
  Interval e_;
};

CertifiedConstants certified_constants(unsigned digits);

}  // namespace lvl2
