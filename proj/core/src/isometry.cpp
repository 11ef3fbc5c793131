#include "crooked/isometry.hpp"

namespace crooked {

template struct LinearIso<Rat>;
template struct LinearIso<double>;
template struct AffineIso<Rat>;
template struct AffineIso<double>;

template LinearIso<Rat> sl2_adjoint(const Mat2<Rat>&);
template LinearIso<double> sl2_adjoint(const Mat2<double>&);
template IsoClass classify(const LinearIso<Rat>&);
template IsoClass classify(const LinearIso<double>&);
template PositiveNeutral<Rat> positive_neutral(const LinearIso<Rat>&);
template PositiveNeutral<double> positive_neutral(const LinearIso<double>&);
template Rat margulis(const AffineIso<Rat>&, const Vec3<Rat>&);
template double margulis(const AffineIso<double>&, const Vec3<double>&);
template SignClass sign_of(const AffineIso<Rat>&);
template SignClass sign_of(const AffineIso<double>&);

}  // namespace crooked
