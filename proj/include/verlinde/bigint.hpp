#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace verlinde {

// Exact integers of unbounded size; dimension counts grow like k^g.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace verlinde
