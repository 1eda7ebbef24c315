#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

// Eigen expressions expose a const_iterator whose traits are void; keep
// Boost's byte-container constructor probe away from them.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace qmf {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

// Throws std::overflow_error when q is not an integer or does not fit.
std::int64_t to_int64(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

template <class S> S scalar_from_int(std::int64_t v) { return S(v); }

}  // namespace qmf
