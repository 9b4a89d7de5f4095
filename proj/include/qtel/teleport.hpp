#pragma once

/*
 * End-to-end teleportation protocols. Alice and Bob share the d-photon
 * totally antisymmetric state split by a photon partition; the Bell
 * measurement on Charlie's and Alice's photons is either the physical
 * beam-splitter cascade followed by a coincidence count, or an ideal
 * projector onto the antisymmetric state. On success Bob holds Charlie's
 * state with probability 1/D^2, D = binomial(d, n).
 */

#include <cstdint>
#include <random>
#include <vector>

#include "qtel/antisym.hpp"
#include "qtel/bell_filter.hpp"
#include "qtel/fock.hpp"

namespace qtel {

enum class TeleportMode { PhysicalFilter, IdealProjector };

const char* to_string(TeleportMode mode);

/// Coefficients of Charlie's qudit in the OAM basis; must be normalized.
struct QuditInput {
  std::vector<Complex> coefficients;
};

struct TeleportReport {
  int d = 0;
  int partition_a = 0;  // photons on Alice's side
  int partition_b = 0;  // photons teleported to Bob
  TeleportMode mode = TeleportMode::IdealProjector;
  double success_probability = 0.0;
  double fidelity = 0.0;
  int photons_total = 0;
  double qubits_sent = 0.0;  // log2 of the teleported-space dimension
};

/// Teleports a single d-level photon (partition (d-1, 1)). Physical mode
/// runs the d-port Bell filter; supported for 2 <= d <= 5.
TeleportReport teleport_single_qudit(int d, const QuditInput& chi,
                                     TeleportMode mode);

/// Teleports the collective antisymmetric state of d-n photons for the
/// partition in `part`. chi_coeffs has binomial(d, d-n) entries over the
/// (d-n)-subset minor basis in colexicographic order. Physical mode is
/// available for n = d-1 and for (d, n) = (3, 1).
TeleportReport teleport_collective(int d, const PartitionSpec& part,
                                   const std::vector<Complex>& chi_coeffs,
                                   TeleportMode mode);

/// Same protocol with Charlie's state given explicitly on paths
/// 0..d-n-1 of its own register. Rejects states whose overlap with the
/// antisymmetric subspace falls short by more than 1e-10.
TeleportReport teleport_collective_state(int d, const PartitionSpec& part,
                                         const PureState& chi,
                                         TeleportMode mode);

struct EfficiencyRow {
  int d = 0;
  std::uint64_t dim = 0;            // binomial(d, d/2)
  double qubits = 0.0;              // log2(dim)
  double collective_per_additional = 0.0;
  double collective_per_generated = 0.0;
  double individual_per_additional = 0.5;
  double individual_per_generated = 1.0 / 3.0;
};

/// Qubits teleported per photon for the (d/2, d/2) collective scheme
/// against individual qubit teleportation. All d must be even.
std::vector<EfficiencyRow> efficiency_curve(const std::vector<int>& d_list);

/// Coincidence probability of |Psi_{m1 m2}> through the d-port filter.
/// Nonzero only at (0, 0).
double bell_filter_response(int d, GeneralizedBellIndex idx);

/// Normalized complex-Gaussian coefficient vector.
QuditInput random_qudit_input(int dim, std::mt19937_64& rng);

}  // namespace qtel
