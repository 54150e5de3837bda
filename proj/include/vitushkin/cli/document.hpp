#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vitushkin/bounds.hpp"
#include "vitushkin/diagram.hpp"
#include "vitushkin/empirical.hpp"
#include "vitushkin/funceval.hpp"
#include "vitushkin/polytope.hpp"
#include "vitushkin/rational.hpp"

namespace vitushkin::cli {

enum class FunctionClass { Polynomial, MultiDegree, Laurent, QuasiPoly, ExpoPoly, Semialgebraic };

std::string_view class_name(FunctionClass c);

struct SectionRequest {
  SectionSpec spec;
  SectionMode mode = SectionMode::Boundary;
  std::size_t resolution = 64;
};

/// One problem instance as read from a JSON document.
///
/// Recognised fields: class, n, degree, degrees, terms, newton, rho,
/// epsilons, samples_per_axis, sections, mu, orthant_clip, plus the
/// class-specific extras frequencies, degree_sums, cube_side, m,
/// lambda_hat, real, interval_length, origin and chat_override.
struct ProblemDocument {
  FunctionClass cls = FunctionClass::Polynomial;
  std::size_t n = 1;

  std::optional<unsigned> degree;                 // polynomial, multidegree
  std::vector<unsigned> term_degrees;              // quasipoly "degrees"
  std::vector<std::vector<unsigned>> ineq_degrees;  // semialgebraic "degrees"
  std::vector<std::vector<double>> frequencies;    // quasipoly b_j without terms
  std::vector<unsigned> degree_sums;               // quasipoly m_r
  std::optional<unsigned> m;                       // expopoly without terms
  std::optional<double> lambda_hat;
  std::optional<bool> real;
  Rational cube_side = 1;
  Rational interval_length = 1;

  std::optional<MonomialSum> poly;
  std::optional<QuasiPoly> quasi;
  std::optional<ExpoPoly> expo;
  std::vector<LatticePoint> newton;

  std::optional<Rational> rho;
  std::vector<Rational> epsilons;
  std::size_t samples_per_axis = 4;
  std::vector<SectionRequest> sections;
  Rational mu = 1;
  std::optional<bool> orthant_clip;
  std::optional<Rational> origin;
  std::optional<std::vector<BoundPair>> chat_override;
};

/// Parses and validates a document. Throws InputError naming the field (and
/// the line and column for JSON syntax errors).
ProblemDocument parse_document(std::string_view text);

/// Canonical JSON rendering; parse_document(normalize(d)) reproduces d.
std::string normalize(const ProblemDocument& doc);

/// Section constants for s = 0..n and the volume term.
BoundProfile build_profile(const ProblemDocument& doc);

/// The function whose sub-level set is verified; needs explicit terms and rho.
RealFunction build_function(const ProblemDocument& doc);

/// Newton polytope used by the polytope report: from terms, from the newton
/// field, or the standard simplex/cube for degree-only documents.
LatticePolytope document_polytope(const ProblemDocument& doc);

bool default_clip(const ProblemDocument& doc);

}  // namespace vitushkin::cli
