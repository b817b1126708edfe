#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubres {

/// Arbitrary-precision signed integer without expression templates, so
/// products can be passed straight into containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace schubres
