#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crooked/oracle.hpp"
#include "crooked/three_holed.hpp"

namespace crooked {

// Reduced words in the free group on two letters, letters 1, -1, 2, -2,
// breadth-first, identity included.
std::vector<std::vector<int>> reduced_words(int max_length);

struct TileViolation {
  std::vector<int> word_a, word_b;
  int wall_a = 0, wall_b = 0;
  Vec3<Rat> witness;
};

struct TileReport {
  int words = 0;
  long long wall_pairs = 0;
  long long shared_walls = 0;  // identical translate walls (adjacent copies)
  long long intersections = 0;
  std::optional<TileViolation> first_violation;
  int point_samples = 0;
  long long multi_cover_points = 0;  // sample points interior to >= 2 copies
  std::vector<std::string> notes;
  bool ok() const { return intersections == 0 && multi_cover_points == 0; }
};

// Finite-depth audit of the translates of the four domain walls under reduced
// words in the pairing isometries: distinct translate walls must be equal (a
// shared wall) or disjoint, and sampled points must be interior to at most
// one copy. Evidence at finite depth, not a properness proof.
TileReport tile_audit(const AffineIso<Rat>& gamma1, const AffineIso<Rat>& gamma2,
                      const std::array<CrookedHalfSpace<Rat>, 4>& walls, int depth, int point_samples,
                      std::uint64_t seed, int jobs = 1);

}  // namespace crooked
