#ifndef HYPERVIS_BIGINT_HPP
#define HYPERVIS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hypervis {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace hypervis

#endif
