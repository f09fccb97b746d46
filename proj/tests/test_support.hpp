#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gammalab/exact.hpp"

namespace gammalab::testing {

/// Seed for randomized property tests (`--seed=N` or GAMMALAB_SEED).
std::uint64_t seed();

inline ExactMatrix m(const char* text) { return parse_matrix(text); }

inline const ExactMatrix& sigma_x() {
  static const ExactMatrix s = m("[[0,1],[1,0]]");
  return s;
}
inline const ExactMatrix& sigma_y() {
  static const ExactMatrix s = m("[[0,-i],[i,0]]");
  return s;
}
inline const ExactMatrix& sigma_z() {
  static const ExactMatrix s = m("[[1,0],[0,-1]]");
  return s;
}

/// Standard 4x4 gamma matrices: sigma_y (x) sigma_k for k = 1..3, sigma_z (x) I.
inline std::vector<ExactMatrix> dirac_gammas() {
  return {kronecker(sigma_y(), sigma_x()), kronecker(sigma_y(), sigma_y()), kronecker(sigma_y(), sigma_z()),
          kronecker(sigma_z(), ExactMatrix::identity(2))};
}

/// Naive matrix-level closure, independent of MatrixGroup.
inline std::vector<ExactMatrix> naive_closure(const std::vector<ExactMatrix>& gens) {
  std::vector<ExactMatrix> out{ExactMatrix::identity(gens.front().dim())};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = out.size();
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& g : gens) {
        ExactMatrix p = out[a] * g;
        bool known = false;
        for (const auto& e : out)
          if (e == p) {
            known = true;
            break;
          }
        if (!known) {
          out.push_back(p);
          grew = true;
        }
      }
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, int bound = 9) {
  return {random_rational(rng, bound), random_rational(rng, bound)};
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, int bound = 3) {
  std::vector<GaussianRational> e;
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t k = 0; k < dim * dim; ++k) e.emplace_back(Rational(d(rng)), Rational(d(rng)));
  return {dim, std::move(e)};
}

}  // namespace gammalab::testing
