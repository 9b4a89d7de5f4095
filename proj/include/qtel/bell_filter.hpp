#pragma once

/*
 * The recursive d-port Bell filter: a cascade of d-1 beam splitters whose
 * combined unitary U_d satisfies the cofactor sufficiency condition
 * eta_dk = U_dk * Co(U)_[dk] = 1/d for every entry of the last row. With a
 * coincidence count in all d output ports it projects onto the totally
 * antisymmetric d-photon state and suppresses every other generalized
 * Bell state.
 */

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qtel/fock.hpp"
#include "qtel/linear_optics.hpp"

namespace qtel {

struct BellFilterSpec {
  int d = 0;
  ModeUnitary unitary;
  /// Beam-splitter transmissivities in build order: (d-1)/d, ..., 1/2.
  std::vector<double> transmissivities;
};

struct GeneralizedBellIndex {
  int m1 = 0;
  int m2 = 0;
};

/// U_d = S_d * diag(1, U_{d-1}) with U_2 = S_2, where S_d is the
/// 1/d:(d-1)/d beam splitter mixing the first and last of d paths.
/// Acted paths default to 0..d-1. Requires 2 <= d <= 7.
BellFilterSpec bell_filter_unitary(int d);

/// Signed minor (-1)^{i+j} det(m with row i, column j removed); indices
/// are 0-based. Requires a square matrix of size >= 2.
Complex cofactor(const Eigen::MatrixXcd& m, int i, int j);

/// Evaluates eta_k = U(d-1, k) * Co(U)_[d-1, k] over the last row and
/// reports whether all values agree within 1e-10.
std::pair<bool, std::vector<Complex>> check_sufficiency(const ModeUnitary& u);

/// Generalized Bell state |Psi_{m1 m2}> on d paths: the first d-1 paths
/// carry the last-row minor states |A_j>, the last path the single photon
/// |B_{(j+m2) mod d}>, with phases omega^{j m1}. Index (0,0) reproduces
/// the totally antisymmetric state exactly.
PureState generalized_bell_state(const Register& reg, int d,
                                 GeneralizedBellIndex idx,
                                 const std::vector<int>& paths);

/// Keeps only terms with exactly one photon (any OAM) in every watched
/// path. Returns the unnormalized surviving state and the probability
/// (surviving norm_sq over input norm_sq).
std::pair<PureState, double> coincidence_project(const PureState& state,
                                                 const std::vector<int>& watch_paths);

}  // namespace qtel
