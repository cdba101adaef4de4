#pragma once

#include <cmath>
#include <span>

namespace mec {

/// Neumaier-compensated running sum. Supports subtraction, so it can track
/// the total of a container that gains and loses elements.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void subtract(double x) noexcept { add(-x); }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  CompensatedSum& operator-=(double x) noexcept {
    subtract(x);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace mec
