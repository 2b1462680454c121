#pragma once

// Seeded random surgery presentations and quasi-positive band words.

#include <random>
#include <vector>

#include "plumbtau/surgery_calculus.hpp"
#include "support/oracles.hpp"

namespace sample {

/// t <= 4 components, entries in [-5, 5], about a quarter Stein handles, Q nonsingular.
inline plumbtau::SurgeryPresentation presentation(std::mt19937_64& rng) {
  using namespace plumbtau;
  std::uniform_int_distribution<int> small(-5, 5), count(1, 4), links(0, 4), coin(0, 3);
  for (;;) {
    SurgeryPresentation p;
    const std::size_t t = static_cast<std::size_t>(count(rng));
    for (std::size_t i = 0; i < t; ++i) {
      if (coin(rng) == 0) {
        p.components.push_back({ComponentKind::stein_handle, 0, 0});
      } else {
        p.components.push_back({ComponentKind::contact_minus_one, small(rng), small(rng)});
      }
    }
    p.linking = IntMatrix(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) p.linking(i, j) = p.linking(j, i) = small(rng);
    const int ell = links(rng);
    for (int k = 0; k < ell; ++k) {
      IntVector l;
      for (std::size_t i = 0; i < t; ++i) l.push_back(small(rng));
      p.link_components.push_back(l);
    }
    oracle::Mat q(t, oracle::Vec(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        q[i][j] = (i == j ? p.components[i].coefficient() : p.linking(i, j)).convert_to<long long>();
    if (oracle::laplace_det(q) != 0) return p;
  }
}

/// Up to 6 strands and 8 positive bands with conjugators of length <= 3.
inline plumbtau::BraidDatum quasi_positive(std::mt19937_64& rng, std::size_t* band_count = nullptr) {
  using namespace plumbtau;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(1, 6);
  std::vector<Band> bands;
  if (n > 1) {
    const int count = pick(0, 8);
    for (int b = 0; b < count; ++b) {
      Band band;
      const int len = pick(0, 3);
      for (int i = 0; i < len; ++i) {
        const int g = pick(1, n - 1);
        band.conjugator.push_back(pick(0, 1) ? g : -g);
      }
      band.generator = pick(1, n - 1);
      bands.push_back(band);
    }
  }
  if (band_count) *band_count = bands.size();
  return quasi_positive_braid(n, bands);
}

}  // namespace sample
