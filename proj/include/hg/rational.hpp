#ifndef HG_RATIONAL_HPP
#define HG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hg {

// Exact fractions of arbitrary-size integers; no rounding anywhere in the
// symbolic layer.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

}  // namespace hg

#endif
