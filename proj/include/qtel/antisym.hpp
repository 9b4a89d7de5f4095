#pragma once

/*
 * Totally antisymmetric multi-photon states built from determinants of the
 * path-by-OAM creation-operator matrix, plus their Laplace-expansion
 * Schmidt decompositions for arbitrary photon partitions.
 */

#include <cstdint>
#include <vector>

#include "qtel/fock.hpp"

namespace qtel {

/// The d x d creation-operator matrix: row r is path paths[r], column c is
/// OAM label oams[c]. Paths and OAM labels must each be distinct.
struct LambdaMatrix {
  int d = 0;
  std::vector<int> paths;
  std::vector<int> oams;
};

/// Splits the d photons of a LambdaMatrix into side A (n photons) and
/// side B (d - n photons). Path lists partition the LambdaMatrix paths.
struct PartitionSpec {
  int n = 0;
  std::vector<int> side_a_paths;
  std::vector<int> side_b_paths;
};

/// Laplace-expansion Schmidt form: state = sum_i coeff_i * sign_i *
/// side_a[i] (x) side_b[i], with both state lists orthonormal. Terms are
/// ordered by the side-A OAM subset in colexicographic order.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<int> signs;
  std::vector<PureState> side_a_states;
  std::vector<PureState> side_b_states;
};

/// Normalized determinant state det(M)|0>/sqrt(k!) for the submatrix with
/// the given rows (paths, in listed order) and columns (OAM labels).
PureState determinant_state(const Register& reg, const std::vector<int>& paths,
                            const std::vector<int>& oams);

/// The d-photon totally antisymmetric state det(Lambda)|0>/sqrt(d!):
/// d! terms of amplitude +-1/sqrt(d!), one photon per listed path and
/// per listed OAM label. Requires d <= 7.
PureState antisymmetric_state(const Register& reg, const LambdaMatrix& lambda);

/// Dimension binomial(d, n) of the antisymmetric subspace of n qudit
/// subsystems with d levels each. Throws when n > d or n < 0.
std::uint64_t antisym_dimension(int d, int n);

/// Laplace expansion of det(Lambda) over side A's rows: binomial(d, n)
/// Schmidt terms with equal coefficients 1/sqrt(D) and signs +-1.
SchmidtDecomposition laplace_partition(const Register& reg,
                                       const LambdaMatrix& lambda,
                                       const PartitionSpec& part);

/// Singular values (descending) of the bipartite coefficient matrix of a
/// normalized state split between side_a_paths and the rest. Independent
/// numerical check of laplace_partition.
std::vector<double> schmidt_spectrum(const PureState& state,
                                     const std::vector<int>& side_a_paths);

/// All k-subsets of {0..d-1} in colexicographic order, each ascending.
std::vector<std::vector<int>> subsets_colex(int d, int k);

}  // namespace qtel
