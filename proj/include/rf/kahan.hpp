#pragma once

namespace rf {

/// Kahan-compensated running sum. Works for any field-like value type
/// (double, long double, std::complex).
template <typename Value>
struct KahanAccumulator {
  Value sum = Value{0};
  Value compensation = Value{0};

  void operator+=(Value value) {
    const Value y = value - compensation;
    const Value t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  Value value() const { return sum; }
};

}  // namespace rf
