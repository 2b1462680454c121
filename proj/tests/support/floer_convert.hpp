#pragma once

// Bridges the oracle's plain complex description to the library type.

#include <string>
#include <utility>

#include "plumbtau/floer_complex.hpp"
#include "support/oracles.hpp"

inline std::pair<plumbtau::FloerComplex, plumbtau::AlexanderFiltration> to_library(const oracle::Complex& c) {
  plumbtau::FloerComplex out(c.ell);
  plumbtau::AlexanderFiltration f;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.add_generator("x" + std::to_string(i), c.gr[i]);
    f.level.push_back(c.level[i]);
  }
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (c.d[x][y]) out.add_entry(x, y, c.power(x, y));
  return {out, f};
}
