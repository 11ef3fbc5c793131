#include "crooked/scalar.hpp"

namespace crooked {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSpacelike: return "NotSpacelike";
    case Errc::BadCausality: return "BadCausality";
    case Errc::NotAnIsometry: return "NotAnIsometry";
    case Errc::NotHyperbolicOrParabolic: return "NotHyperbolicOrParabolic";
    case Errc::NotFixedVector: return "NotFixedVector";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::Indeterminate: return "Indeterminate";
    case Errc::WrongPairType: return "WrongPairType";
    case Errc::NotConsistentlyOriented: return "NotConsistentlyOriented";
    case Errc::LabelingFailed: return "LabelingFailed";
    case Errc::NotRational: return "NotRational";
    case Errc::NotExactlyRepresentable: return "NotExactlyRepresentable";
    case Errc::TangentDirection: return "TangentDirection";
    case Errc::EllipticGenerator: return "EllipticGenerator";
    case Errc::CoincidentAxes: return "CoincidentAxes";
    case Errc::DegenerateEndpoints: return "DegenerateEndpoints";
    case Errc::NonPositiveMu: return "NonPositiveMu";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NoRealB3: return "NoRealB3";
    case Errc::RelationUnsatisfiable: return "RelationUnsatisfiable";
    case Errc::Singular: return "Singular";
    case Errc::NotInNormalizer: return "NotInNormalizer";
    case Errc::NonPositiveInteger: return "NonPositiveInteger";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

namespace {
thread_local double g_float_eps = 1e-9;
}

double float_eps() { return g_float_eps; }
void set_float_eps(double eps) { g_float_eps = eps; }

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

std::optional<Rat> sqrt_exact(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (!is_square(num) || !is_square(den)) return std::nullopt;
  return Rat(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
}

std::string rat_to_string(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Errc::BadInput, "rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Errc::BadInput, "cannot parse rational: " + s);
  }
}

}  // namespace crooked
