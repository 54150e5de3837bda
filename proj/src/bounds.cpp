#include "vitushkin/bounds.hpp"

#include <string>

#include "vitushkin/errors.hpp"

namespace vitushkin {

void validate(const BoundProfile& profile) {
  if (profile.n < 1) throw InputError("profile dimension must be positive");
  if (profile.chat.size() != profile.n + 1) {
    throw InputError("profile needs " + std::to_string(profile.n + 1) + " section constants, got " +
                     std::to_string(profile.chat.size()));
  }
  if (profile.mu < 0 || profile.mu > 1) throw InputError("mu must lie in [0, 1]");
  for (const auto& c : profile.chat) {
    if (c.paper_bound < 0 || c.safe_bound < 0) throw InputError("section constants must be nonnegative");
  }
}

AssembledBound assemble(const BoundProfile& profile) {
  validate(profile);
  const unsigned n = static_cast<unsigned>(profile.n);
  AssembledBound out;
  out.n = profile.n;
  out.mu = profile.mu;
  out.coeff.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    const BoundPair& c = profile.chat[n - t];
    Rational weight(pow(BigInt(2), t) * binomial(n, t));
    BoundPair ct;
    ct.paper_bound = c.paper_bound * weight;
    ct.safe_bound = c.safe_bound * weight;
    ct.degenerate = c.degenerate;
    out.coeff.push_back(std::move(ct));
  }
  return out;
}

BoundPair evaluate(const AssembledBound& bound, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 1) throw InputError("epsilon must lie in (0, 1], got " + to_string(epsilon));
  const Rational inv = 1 / epsilon;
  BoundPair total;
  Rational scale = 1;
  for (const auto& c : bound.coeff) {
    total.paper_bound += c.paper_bound * scale;
    total.safe_bound += c.safe_bound * scale;
    total.degenerate = total.degenerate || c.degenerate;
    scale *= inv;
  }
  total.paper_bound += bound.mu * scale;
  total.safe_bound += bound.mu * scale;
  return total;
}

std::vector<BoundRow> bound_table(const AssembledBound& bound, std::span<const Rational> epsilons) {
  std::vector<BoundRow> rows;
  rows.reserve(epsilons.size());
  for (const auto& eps : epsilons) {
    BoundPair v = evaluate(bound, eps);
    rows.push_back({eps, std::move(v.paper_bound), std::move(v.safe_bound)});
  }
  return rows;
}

}  // namespace vitushkin
