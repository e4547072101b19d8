#pragma once

// Forward-mode dual numbers with N simultaneous derivative directions.
//
// Dual<T, N> carries a value and its gradient along N seeded directions.
// T may itself be a Dual, in which case nesting yields exact second
// derivatives: Dual<Dual<C, N>, N> seeded on both levels gives the full
// Hessian of a map in one evaluation. T may be real or std::complex.

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <type_traits>

namespace edept {

template <class T, std::size_t N>
class Dual;

template <class T>
struct dual_depth : std::integral_constant<int, 0> {};
template <class T, std::size_t N>
struct dual_depth<Dual<T, N>> : std::integral_constant<int, 1 + dual_depth<T>::value> {};
template <class T>
inline constexpr int dual_depth_v = dual_depth<std::remove_cvref_t<T>>::value;

template <class T, std::size_t N>
class Dual {
 public:
  using value_type = T;
  static constexpr std::size_t directions = N;

  T v{};
  std::array<T, N> d{};

  constexpr Dual() { d.fill(T{}); }

  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>) && std::is_constructible_v<T, const U&>
  constexpr explicit Dual(const U& value) : v(value) {
    d.fill(T{});
  }

  /// A variable seeded along direction `i`.
  template <class U>
  static constexpr Dual variable(const U& value, std::size_t i) {
    Dual x(value);
    x.d[i] = T(1.0);
    return x;
  }

  constexpr Dual operator-() const {
    Dual r;
    r.v = -v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = -d[i];
    return r;
  }

  constexpr Dual& operator+=(const Dual& b) {
    v += b.v;
    for (std::size_t i = 0; i < N; ++i) d[i] += b.d[i];
    return *this;
  }
  constexpr Dual& operator-=(const Dual& b) {
    v -= b.v;
    for (std::size_t i = 0; i < N; ++i) d[i] -= b.d[i];
    return *this;
  }
  constexpr Dual& operator*=(const Dual& b) { return *this = *this * b; }
  constexpr Dual& operator/=(const Dual& b) { return *this = *this / b; }

  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  constexpr Dual& operator+=(const U& s) {
    v += s;
    return *this;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  constexpr Dual& operator-=(const U& s) {
    v -= s;
    return *this;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  constexpr Dual& operator*=(const U& s) {
    v *= s;
    for (std::size_t i = 0; i < N; ++i) d[i] *= s;
    return *this;
  }

  friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }

  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v * b.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
  }

  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(1.0) / b.v;
    Dual r;
    r.v = a.v * inv;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
    return r;
  }

  // Mixed arithmetic with anything shallower than this Dual (double,
  // std::complex, or an inner Dual level).
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator+(Dual a, const U& s) {
    a.v += s;
    return a;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator+(const U& s, Dual a) {
    a.v += s;
    return a;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator-(Dual a, const U& s) {
    a.v -= s;
    return a;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator-(const U& s, const Dual& a) {
    Dual r = -a;
    r.v += s;
    return r;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator*(Dual a, const U& s) {
    return a *= s;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator*(const U& s, Dual a) {
    return a * s;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator/(Dual a, const U& s) {
    const T inv = T(1.0) / T(s);
    return a * inv;
  }
  template <class U>
    requires(dual_depth_v<U> < dual_depth_v<Dual>)
  friend constexpr Dual operator/(const U& s, const Dual& b) {
    const T inv = T(1.0) / b.v;
    Dual r;
    r.v = T(s) * inv;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = -(r.v * b.d[i]) * inv;
    return r;
  }
};

// Innermost scalar of a (possibly nested) dual.
template <class T>
constexpr const auto& value_of(const T& x) {
  if constexpr (dual_depth_v<T> == 0)
    return x;
  else
    return value_of(x.v);
}

/// Integer power by repeated squaring; exact for duals of any depth.
template <class S>
constexpr S ipow(S base, int n) {
  if (n < 0) return S(1.0) / ipow(base, -n);
  S result(1.0);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  Dual<T, N> r;
  r.v = sqrt(a.v);
  const T half_inv = T(0.5) / r.v;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * half_inv;
  return r;
}

template <class T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  Dual<T, N> r;
  r.v = exp(a.v);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * r.v;
  return r;
}

template <class T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  Dual<T, N> r;
  r.v = log(a.v);
  const T inv = T(1.0) / a.v;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * inv;
  return r;
}

template <class T, std::size_t N>
Dual<T, N> sin(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  Dual<T, N> r;
  r.v = sin(a.v);
  const T c = cos(a.v);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * c;
  return r;
}

template <class T, std::size_t N>
Dual<T, N> cos(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  Dual<T, N> r;
  r.v = cos(a.v);
  const T s = -sin(a.v);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * s;
  return r;
}

}  // namespace edept
