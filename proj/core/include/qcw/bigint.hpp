#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qcw {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace qcw
