#pragma once

#include <cstdint>
#include <vector>

namespace twocolor {

// Integer power series truncated at q^order. Every operation keeps the
// same order; coefficient overflow throws std::overflow_error.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // the zero series
    // Order is coeffs.size() - 1; coeffs must be nonempty.
    explicit PowerSeries(std::vector<std::int64_t> coeffs);
    static PowerSeries one(int order);

    int order() const noexcept { return order_; }
    std::int64_t operator[](int n) const;
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator*=(const PowerSeries& rhs);

    // Multiply by (1 + q^m).
    PowerSeries& times_one_plus(int m);
    // Multiply by 1/(1 - q^m) = sum_i q^(m i).
    PowerSeries& over_one_minus(int m);

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    int order_;
    std::vector<std::int64_t> coeffs_;
};

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator*(PowerSeries lhs, const PowerSeries& rhs);

// prod_{k>=1} (1+q^k) * prod_{k>=1} (1+q^(2k-1)): counts E(n).
PowerSeries series_E(int order);

// prod_{k>=1} (1+q^(2k-1)) / (1-q^(2k-1)): counts odd overpartitions.
PowerSeries series_podd(int order);

} // namespace twocolor
