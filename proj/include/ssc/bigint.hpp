#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ssc/errors.hpp"

namespace ssc {

using BigInt = boost::multiprecision::cpp_int;

// q^e as an exact integer, e >= 0.
BigInt q_pow(int q, long e);

// Exact division; throws BadArgs if b does not divide a.
BigInt div_exact(const BigInt& a, const BigInt& b);

// ceil(a/b) for non-negative a, positive b.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Gaussian binomial [n k]_q, exact.
BigInt gaussian_binomial(int n, int k, int q);

}  // namespace ssc
