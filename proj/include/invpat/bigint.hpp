#ifndef INVPAT_BIGINT_HPP
#define INVPAT_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace invpat {

// Every count in the library is exact; nothing is ever narrowed to a double.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

} // namespace invpat

#endif // INVPAT_BIGINT_HPP
