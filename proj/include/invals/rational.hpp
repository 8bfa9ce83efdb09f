#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace invals {

// Exact rational arithmetic for objective values, profits and hyper-parameters.
// Integer quantities (demands, capacities, flows) stay in long long.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Parses "n", "n/d" or a decimal like "0.25" into an exact rational.
Rat parse_rational(const std::string& s);

// Canonical textual form: "n" when integral, "n/d" otherwise.
std::string format_rational(const Rat& r);

}  // namespace invals
