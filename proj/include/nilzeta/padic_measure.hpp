#pragma once

#include <string>
#include <vector>

#include "nilzeta/autgroup.hpp"
#include "nilzeta/lattice.hpp"

namespace nilzeta::padic {

/// Valuations of a torus element (a, b, c); 3 va = vb + vc, all >= 0.
struct ValuationTriple {
  int va = 0, vb = 0, vc = 0;
  ValuationTriple() = default;
  ValuationTriple(int a, int b, int c);
  bool operator==(const ValuationTriple&) const = default;
};

/// How a parameter constrained by several columns is counted.
enum class Sharing {
  shared,         // one parameter, all constraints at once (the true count)
  split,          // an independent copy per column
  first_column,   // only the first constraint column kept
  second_column,  // only the second (or the first, if there is one)
};

/// All triples with vb, vc <= bound.
std::vector<ValuationTriple> triples_up_to(int bound);

/// Exponent of p in theta_i(h), i = 1..3.
long theta(int i, const ValuationTriple& v);
/// Same with the shared parameter counted once per constraint column.
long theta_unshared(int i, const ValuationTriple& v);
long det_valuation(const ValuationTriple& v);

/// One free parameter of stage i and the valuations of the torus
/// eigenvalues of the columns it feeds.
struct StageParameter {
  std::string name;
  std::vector<int> exponents;
};

/// Stage-i parameters, read from unipotent matrices with a single unit
/// parameter, and eigenvalue valuations read from the torus matrix
/// diag(p^va, p^vb, p^vc). Stage i covers columns of weight i + 1.
std::vector<StageParameter> stage_parameters(const lattice::QuotientLattice& q, int i, const ValuationTriple& v,
                                             Sharing sharing = Sharing::shared);

/// Smallest admissible level: the largest exponent among the stage's columns.
int theta_level_bound(const lattice::QuotientLattice& q, int i, const ValuationTriple& v);

struct OracleResult {
  Rational value;        // measure relative to integral parameters
  int level = 0;
  int bound = 0;
  std::size_t parameters = 0;
  std::size_t signatures = 0;  // distinct constraint patterns actually counted
};

/// Counts, per parameter, residues r mod p^K for which every scaled entry
/// p^e * r / p^K is integral, and multiplies the counts. Throws
/// Error(precision) if K is below theta_level_bound.
OracleResult theta_bruteforce(const lattice::QuotientLattice& q, int i, const ValuationTriple& v, unsigned long p,
                              int K, Sharing sharing = Sharing::shared, unsigned workers = 1);

struct LiftingResult {
  bool precondition = false;     // g0 acts integrally on V / V_i
  bool same_coset = false;       // g and g0 agree on V / V_i
  bool generators_integral = false;
  bool fully_integral = false;
  bool lifted() const { return precondition && same_coset && generators_integral && fully_integral; }
};

/// g0 = n0 h with h = diag(p^va, p^vb, p^vc). Builds n from n0 by zeroing
/// every parameter in a column of weight >= i and checks that g = n h is an
/// integral lift of g0 N_{i-1}. Stage i in {2, 3, 4}.
LiftingResult lifting_check(const lattice::QuotientLattice& q, int i, const ValuationTriple& v,
                            const aut::UnipotentParams& n0, unsigned long p);

/// Parameters zeroed by the lifting construction at stage i.
aut::UnipotentParams truncate_params(const aut::UnipotentParams& n0, int i);

aut::TorusElement torus_from_valuations(const ValuationTriple& v, unsigned long p);

}  // namespace nilzeta::padic
