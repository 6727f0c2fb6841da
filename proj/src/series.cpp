#include "twocolor/series.hpp"

#include <stdexcept>
#include <string>

namespace twocolor {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("power series coefficient exceeds 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("power series coefficient exceeds 64 bits");
    return r;
}

void require_same_order(int a, int b)
{
    if (a != b)
        throw std::invalid_argument("power series orders differ: " + std::to_string(a)
                                    + " vs " + std::to_string(b));
}

} // namespace

PowerSeries::PowerSeries(int order) : order_(order)
{
    if (order < 0)
        throw std::invalid_argument("power series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

PowerSeries::PowerSeries(std::vector<std::int64_t> coeffs)
    : order_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("power series needs at least the constant coefficient");
}

PowerSeries PowerSeries::one(int order)
{
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

std::int64_t PowerSeries::operator[](int n) const
{
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation order "
                                + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs)
{
    require_same_order(order_, rhs.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs)
{
    require_same_order(order_, rhs.order_);
    std::vector<std::int64_t> out(coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
    coeffs_ = std::move(out);
    return *this;
}

PowerSeries& PowerSeries::times_one_plus(int m)
{
    if (m < 1)
        throw std::invalid_argument("times_one_plus: exponent must be positive");
    for (int i = order_; i >= m; --i)
        coeffs_[i] = checked_add(coeffs_[i], coeffs_[i - m]);
    return *this;
}

PowerSeries& PowerSeries::over_one_minus(int m)
{
    if (m < 1)
        throw std::invalid_argument("over_one_minus: exponent must be positive");
    for (int i = m; i <= order_; ++i)
        coeffs_[i] = checked_add(coeffs_[i], coeffs_[i - m]);
    return *this;
}

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs)
{
    return lhs += rhs;
}

PowerSeries operator*(PowerSeries lhs, const PowerSeries& rhs)
{
    return lhs *= rhs;
}

PowerSeries series_E(int order)
{
    PowerSeries s = PowerSeries::one(order);
    for (int k = 1; k <= order; ++k)
        s.times_one_plus(k);
    for (int k = 1; k <= order; k += 2)
        s.times_one_plus(k);
    return s;
}

PowerSeries series_podd(int order)
{
    PowerSeries s = PowerSeries::one(order);
    for (int k = 1; k <= order; k += 2)
        s.times_one_plus(k).over_one_minus(k);
    return s;
}

} // namespace twocolor
