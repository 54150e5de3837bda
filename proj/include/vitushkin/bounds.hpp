#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vitushkin/diagram.hpp"
#include "vitushkin/rational.hpp"

namespace vitushkin {

/// Section constants for s = 0..n and the volume term of the covered set.
struct BoundProfile {
  std::size_t n = 1;
  std::vector<BoundPair> chat;  // index s, length n+1
  Rational mu = 1;              // Lebesgue measure of the set, in [0, 1]
};

/// Coefficients of the covering bound
///   M(eps) <= C_0 + C_1/eps + ... + C_{n-1}/eps^{n-1} + mu/eps^n,
/// with C_t = chat_{n-t} 2^t binom(n, t) in each variant.
struct AssembledBound {
  std::size_t n = 1;
  std::vector<BoundPair> coeff;  // C_0..C_{n-1}
  Rational mu = 1;
};

struct BoundRow {
  Rational epsilon;
  Rational paper;
  Rational safe;
};

void validate(const BoundProfile& profile);
AssembledBound assemble(const BoundProfile& profile);

/// Exact right-hand side at eps in (0, 1].
BoundPair evaluate(const AssembledBound& bound, const Rational& epsilon);

std::vector<BoundRow> bound_table(const AssembledBound& bound, std::span<const Rational> epsilons);

}  // namespace vitushkin
