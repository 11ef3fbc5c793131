#include "crooked/crooked_plane.hpp"

namespace crooked {

template struct CrookedPlane<Rat>;
template struct CrookedPlane<double>;
template struct CrookedHalfSpace<Rat>;
template struct CrookedHalfSpace<double>;

template Region hs_contains(const CrookedHalfSpace<Rat>&, const Vec3<Rat>&);
template Region hs_contains(const CrookedHalfSpace<double>&, const Vec3<double>&);
template std::array<PlanarPiece<Rat>, 4> pieces(const CrookedPlane<Rat>&);
template std::array<PlanarPiece<double>, 4> pieces(const CrookedPlane<double>&);
template CrookedPlane<Rat> image(const AffineIso<Rat>&, const CrookedPlane<Rat>&);
template CrookedPlane<double> image(const AffineIso<double>&, const CrookedPlane<double>&);
template CrookedHalfSpace<Rat> image_halfspace(const AffineIso<Rat>&, const CrookedHalfSpace<Rat>&);
template CrookedHalfSpace<double> image_halfspace(const AffineIso<double>&, const CrookedHalfSpace<double>&);
template bool disjoint_ultraparallel(const CrookedPlane<Rat>&, const CrookedPlane<Rat>&);
template bool disjoint_ultraparallel(const CrookedPlane<double>&, const CrookedPlane<double>&);
template bool disjoint_asymptotic(const CrookedPlane<Rat>&, const CrookedPlane<Rat>&);
template bool disjoint_asymptotic(const CrookedPlane<double>&, const CrookedPlane<double>&);
template bool cone_disjoint(const CrookedPlane<Rat>&, const CrookedPlane<Rat>&);
template bool cone_disjoint(const CrookedPlane<double>&, const CrookedPlane<double>&);
template std::optional<Rat> entry_time(const CrookedHalfSpace<Rat>&, const Vec3<Rat>&, const Vec3<Rat>&);
template std::optional<double> entry_time(const CrookedHalfSpace<double>&, const Vec3<double>&, const Vec3<double>&);

}  // namespace crooked
