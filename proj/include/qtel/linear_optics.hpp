#pragma once

/*
 * Passive linear optics on path modes. Unitaries act on path indices only;
 * OAM labels ride through unchanged (the reflection sign flip of OAM is
 * absorbed into the input labeling convention, see README).
 *
 * Creation operators transform by columns: a^dag_j -> sum_i U_ij a^dag_i,
 * matching the Lambda -> U Lambda row convention for path-indexed operator
 * matrices.
 */

#include <vector>

#include <Eigen/Dense>

#include "qtel/fock.hpp"

namespace qtel {

/// Unitary on a set of paths. `matrix` is dim x dim; entry (i, j) couples
/// input path acted_paths[j] to output path acted_paths[i].
struct ModeUnitary {
  int dim = 0;
  Eigen::MatrixXcd matrix;
  std::vector<int> acted_paths;
};

/// Validates unitarity (max-abs of U^dag U - I <= 1e-12) and distinctness
/// of the acted paths.
ModeUnitary make_mode_unitary(Eigen::MatrixXcd matrix,
                              std::vector<int> acted_paths);

struct BeamSplitterSpec {
  int path_a = 0;
  int path_b = 1;
  double transmissivity = 0.5;
};

/// Real-orthogonal beam splitter embedded in `total_paths` paths:
/// the 2x2 block [[sqrt(t), -sqrt(1-t)], [sqrt(1-t), sqrt(t)]] on
/// (path_a, path_b), identity elsewhere.
ModeUnitary beam_splitter(const BeamSplitterSpec& spec, int total_paths);

/// Matrix product u * v (v applied first). Acted path sets must agree.
ModeUnitary compose(const ModeUnitary& u, const ModeUnitary& v);

/// Applies `u` to a number-definite state by expanding the transformed
/// creation-operator polynomial over the vacuum with sqrt(n!) weights.
PureState apply_unitary(const ModeUnitary& u, const PureState& state);

/// Independent permanent-based oracle for <output| U |input>. Returns 0
/// when total or per-OAM photon numbers disagree. Never throws on photon
/// mismatch; used to cross-check apply_unitary.
Complex transition_amplitude(const ModeUnitary& u, const Register& reg,
                             const OccupationVector& input,
                             const OccupationVector& output);

/// Permanent via Ryser inclusion-exclusion with Gray-code updates, n <= 12.
Complex permanent(const Eigen::MatrixXcd& m);

/// Permanent by summing all n! permutation products, n <= 6. Second-level
/// oracle behind the Ryser implementation.
Complex permanent_naive(const Eigen::MatrixXcd& m);

}  // namespace qtel
