#pragma once

#include <optional>

#include "pentile/algebraic.hpp"
#include "pentile/lengths.hpp"
#include "pentile/polytope.hpp"

namespace pentile {

enum class Certificate { Feasible, InfeasibleCertified, Unknown };

struct CertificateOptions {
  int max_depth = 12;    // box bisection depth for the covering certificate
  int max_boxes = 4096;  // abort to Unknown past this many boxes
  int prec_bits = 40;    // trig enclosure precision
};

// Witness of the closure equation: exact (alpha, l) with l in the cos field.
struct ClosureWitness {
  std::array<Rational, 5> alpha;
  std::array<AlgebraicReal, 5> lengths;
};

// Exact decision of the closure feasibility for a fixed rational angle
// vector: lengths in the open cube, satisfying Q and both projections of the
// unit-circle closure sum. Never Unknown.
Certificate closure_feasible_at(const std::array<Rational, 5>& alpha,
                                const LengthProgram& q,
                                ClosureWitness* witness = nullptr);

// Full certificate: dim(P) = 0 decides exactly; otherwise attempts an
// interval covering refutation and reports Unknown when it fails. Sound in
// both directions: Feasible carries a witness, InfeasibleCertified is exact.
Certificate feasibility_certificate(const AnglePolytope& p, const LengthProgram& q,
                                    const CertificateOptions& opts = {});

// Unique point of a zero-dimensional polytope.
std::optional<std::array<Rational, 5>> unique_alpha(const AnglePolytope& p);

}  // namespace pentile
