#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace hopfgraph {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::backends::cpp_int_backend<>, mp::et_off>;

// Exact arbitrary-precision rational, always reduced with positive
// denominator (maintained by the backend).
using Rational =
    mp::number<mp::backends::rational_adaptor<mp::backends::cpp_int_backend<>>,
               mp::et_off>;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace hopfgraph
