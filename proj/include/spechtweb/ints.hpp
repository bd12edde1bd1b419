#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spechtweb {

// All coefficient arithmetic is exact. The local relations only ever
// introduce the factors 3, -2 and +/-1, so integers suffice; rationals
// appear transiently when a transition matrix is inverted.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace spechtweb
