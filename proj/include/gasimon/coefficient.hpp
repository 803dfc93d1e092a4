#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gasimon {

/// All pipeline quantities are integer-valued, so coefficients are exact
/// arbitrary-precision integers and every comparison is strict equality.
using Coefficient = boost::multiprecision::cpp_int;

}  // namespace gasimon
