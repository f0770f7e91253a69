#pragma once

namespace zetafield {

// Kahan-Neumaier compensated accumulator. Prime sums add 10^5..10^7 terms of
// similar sign; plain accumulation loses ~1e-11 there, this keeps ~1e-16.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace zetafield
