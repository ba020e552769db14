#pragma once

#include <string>
#include <utility>
#include <vector>

namespace unipoint {

/// Every numeric threshold used anywhere in the pipeline, in one place.
/// All values can be overridden by name (CLI --tol name=value); reports embed
/// the effective values so a run can be audited and replayed.
struct Tolerances {
  // Relative coefficient magnitude below which a coefficient counts as zero.
  double zero_threshold = 1e-12;
  // |p(r)| / (1+|r|)^deg accepted for a polished root (max-coeff-1 scaling).
  double root_residual = 1e-10;
  // Newton corrector target during path tracking.
  double newton_residual = 1e-11;
  // |F(P)| below this (unit-scaled F, max-normalized P) classifies an inner center.
  double inner_threshold = 1e-8;
  // |F(P)| in [inner_threshold, inner_ambiguous) is rejected as ambiguous.
  double inner_ambiguous = 1e-6;
  // Residual allowed when removing the center's root from an inner family.
  double deflation = 1e-8;
  // Scale-free determinant bound under which a sampled frame is degenerate.
  double frame_degeneracy = 1e-6;
  // Minimal pairwise branch-point distance for a slice to count as generic.
  double branch_separation = 1e-5;
  // |disc'(b)| relative bound for flagging a branch point as simple.
  double simple_flag = 1e-6;
  // Collision threshold = collision_scale * fiber scale during tracking.
  double collision_scale = 1e-6;
  // Degeneration fiber matching: matched distance < matching_ratio * separation.
  double matching_ratio = 0.25;

  /// Throws Error(input) for unknown names.
  void set(const std::string& name, double value);

  /// Stable (name, value) listing for report embedding.
  std::vector<std::pair<std::string, double>> items() const;
};

}  // namespace unipoint
