#include "crooked/tiling.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace crooked {

std::vector<std::vector<int>> reduced_words(int max_length) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  size_t level_begin = 0;
  const int letters[4] = {1, -1, 2, -2};
  for (int len = 1; len <= max_length; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int l : letters) {
        if (!out[i].empty() && out[i].back() == -l) continue;
        std::vector<int> w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

struct TranslateWall {
  CrookedPlane<Rat> plane;
  int word_idx, wall_idx;
};

AffineIso<Rat> word_iso(const AffineIso<Rat>& g1, const AffineIso<Rat>& g2, const std::vector<int>& word) {
  AffineIso<Rat> acc = AffineIso<Rat>::identity();
  for (int l : word) {
    AffineIso<Rat> step = std::abs(l) == 1 ? g1 : g2;
    if (l < 0) step = invert(step);
    acc = compose(acc, step);
  }
  return acc;
}

}  // namespace

TileReport tile_audit(const AffineIso<Rat>& gamma1, const AffineIso<Rat>& gamma2,
                      const std::array<CrookedHalfSpace<Rat>, 4>& walls, int depth, int point_samples,
                      std::uint64_t seed, int jobs) {
  TileReport rep;
  auto words = reduced_words(depth);
  rep.words = static_cast<int>(words.size());

  std::vector<AffineIso<Rat>> isos;
  isos.reserve(words.size());
  for (const auto& w : words) isos.push_back(word_iso(gamma1, gamma2, w));

  std::vector<TranslateWall> twalls;
  twalls.reserve(words.size() * 4);
  for (size_t wi = 0; wi < words.size(); ++wi)
    for (int k = 0; k < 4; ++k)
      twalls.push_back({image(isos[wi], walls[k].boundary()), static_cast<int>(wi), k});

  // All wall pairs across distinct words.
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < twalls.size(); ++a)
    for (size_t b = a + 1; b < twalls.size(); ++b)
      if (twalls[a].word_idx != twalls[b].word_idx) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  rep.wall_pairs = static_cast<long long>(pairs.size());

  std::atomic<long long> shared{0}, bad{0};
  std::mutex vio_mutex;
  std::optional<TileViolation> violation;

  int n_jobs = jobs < 1 ? 1 : jobs;
  auto run_range = [&](size_t lo, size_t hi) {
    for (size_t idx = lo; idx < hi; ++idx) {
      const TranslateWall& a = twalls[pairs[idx].first];
      const TranslateWall& b = twalls[pairs[idx].second];
      if (a.plane == b.plane) {
        ++shared;
        continue;
      }
      OracleReport r = intersects_exact(a.plane, b.plane);
      if (!r.disjoint) {
        ++bad;
        std::lock_guard<std::mutex> lock(vio_mutex);
        if (!violation)
          violation = TileViolation{words[a.word_idx], words[b.word_idx], a.wall_idx, b.wall_idx,
                                    r.witness.value_or(Vec3<Rat>{})};
      }
    }
  };
  if (n_jobs == 1) {
    run_range(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    size_t chunk = (pairs.size() + n_jobs - 1) / n_jobs;
    for (int t = 0; t < n_jobs; ++t) {
      size_t lo = t * chunk;
      size_t hi = std::min(pairs.size(), lo + chunk);
      if (lo < hi) threads.emplace_back(run_range, lo, hi);
    }
    for (auto& th : threads) th.join();
  }
  rep.shared_walls = shared.load();
  rep.intersections = bad.load();
  rep.first_violation = violation;

  // Point audit: random rational points, each interior to at most one copy.
  rep.point_samples = point_samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-64, 64);
  for (int s = 0; s < point_samples; ++s) {
    Vec3<Rat> q{Rat(num(rng), 8), Rat(num(rng), 8), Rat(num(rng), 8)};
    int covered = 0;
    for (const auto& iso : isos) {
      AffineIso<Rat> inv = invert(iso);
      Vec3<Rat> x = inv(q);
      bool interior_of_copy = true;
      for (const auto& h : walls)
        if (hs_contains(h, x) != Region::Exterior) {
          interior_of_copy = false;
          break;
        }
      if (interior_of_copy && ++covered > 1) break;
    }
    if (covered > 1) ++rep.multi_cover_points;
  }

  rep.notes.push_back("finite-depth audit: evidence, not proof");
  return rep;
}

}  // namespace crooked
