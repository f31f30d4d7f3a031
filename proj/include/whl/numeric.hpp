#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace whl {

// Exact arithmetic only; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace whl
