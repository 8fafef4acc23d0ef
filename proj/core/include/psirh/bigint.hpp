#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace psirh {

using BigUInt = boost::multiprecision::cpp_int;

} // namespace psirh
