#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace crooked {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                          boost::multiprecision::et_off>;

enum class Errc {
  NotSpacelike,
  BadCausality,
  NotAnIsometry,
  NotHyperbolicOrParabolic,
  NotFixedVector,
  NotUnimodular,
  Indeterminate,
  WrongPairType,
  NotConsistentlyOriented,
  LabelingFailed,
  NotRational,
  NotExactlyRepresentable,
  TangentDirection,
  EllipticGenerator,
  CoincidentAxes,
  DegenerateEndpoints,
  NonPositiveMu,
  VerificationFailed,
  SearchExhausted,
  RankDeficient,
  NoRealB3,
  RelationUnsatisfiable,
  Singular,
  NotInNormalizer,
  NonPositiveInteger,
  FormulaMismatch,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Tolerance for sign decisions in float mode. Exact mode ignores it.
double float_eps();
void set_float_eps(double eps);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;
  static int sign(const Rat& x) { return x.sign(); }
  static Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
  static double to_double(const Rat& x) { return x.convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  // Signs within eps of zero are degenerate; callers that must commit to a
  // strict sign use sign_strict and get an Indeterminate error instead of a guess.
  static int sign(double x) {
    double e = float_eps();
    if (x > e) return 1;
    if (x < -e) return -1;
    return 0;
  }
  static double abs(double x) { return x < 0 ? -x : x; }
  static double to_double(double x) { return x; }
};

template <class S>
int sgn(const S& x) {
  return scalar_traits<S>::sign(x);
}

// Like sgn, but a float-mode value inside the eps band is an error, not zero.
template <class S>
int sign_strict(const S& x) {
  if constexpr (scalar_traits<S>::is_exact) {
    return sgn(x);
  } else {
    double e = float_eps();
    if (x > e) return 1;
    if (x < -e) return -1;
    if (x == 0.0) return 0;
    fail(Errc::Indeterminate, "sign within eps of zero");
  }
}

bool is_square(const Int& n);

// Exact square root of a nonnegative rational, when one exists.
std::optional<Rat> sqrt_exact(const Rat& x);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace crooked
