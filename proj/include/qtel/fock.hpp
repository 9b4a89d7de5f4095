#pragma once

/*
 * Multimode bosonic Fock states, kept as sparse maps from occupation
 * vectors to complex amplitudes.
 *
 * Conventions:
 *   - A mode is a (path, oam) pair; modes are numbered path-major,
 *     OAM-minor: mode = path * oam_count + oam.
 *   - Basis kets are unit-normalized, |n> = (a^dag)^n / sqrt(n!) |0>.
 *   - States are not normalized implicitly. After a projection the
 *     squared norm of the surviving state is the event probability.
 *   - Term maps are ordered (lexicographic on the occupation vector),
 *     so iteration and summation order are deterministic.
 */

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qtel {

using Complex = std::complex<double>;

/// Amplitudes with modulus at or below this are dropped from term maps.
inline constexpr double kAmplitudeEps = 1e-14;

/// Photon counts per mode in canonical (path-major, OAM-minor) order.
using OccupationVector = std::vector<int>;

int total_photons(const OccupationVector& occ);

/// A bank of `paths` propagation paths, each carrying the same `oam`-letter
/// OAM alphabet. Physical OAM values are labels only; indices run 0..oam-1.
struct Register {
  int paths = 0;
  int oam = 0;

  int modes() const { return paths * oam; }
  bool operator==(const Register&) const = default;
};

struct ModeId {
  int path = 0;
  int oam = 0;
};

/// Flat mode index for `m` within `reg`; throws if out of range.
int mode_index(const Register& reg, ModeId m);

/// Sparse superposition over occupation vectors with a cached squared norm.
/// Immutable after construction; all operations below are pure functions.
class PureState {
 public:
  using TermMap = std::map<OccupationVector, Complex>;

  PureState() = default;

  /// Builds a state from a raw term map: prunes sub-threshold amplitudes,
  /// caches the squared norm and the photon-number flag. Amplitudes are
  /// taken as given (no normalization).
  static PureState from_terms(Register reg, TermMap terms);

  const Register& reg() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double norm_sq() const { return norm_sq_; }

  /// True when every term carries the same total photon number.
  bool number_definite() const { return number_definite_; }
  /// Total photon number; meaningful only when number_definite().
  int photon_number() const { return photon_number_; }

  Complex amplitude(const OccupationVector& occ) const;

  /// Paths that carry at least one photon in at least one term.
  std::vector<int> occupied_paths() const;

  PureState scaled(Complex factor) const;
  PureState normalized() const;

  /// One line per term: `n_0 n_1 ... n_{M-1} : re im`, canonical order.
  void dump(std::ostream& os) const;

 private:
  Register reg_;
  TermMap terms_;
  double norm_sq_ = 0.0;
  bool number_definite_ = true;
  int photon_number_ = 0;
};

/// Reduced density operator on the modes of a kept path subset. Basis
/// vectors are full-length occupation vectors supported on kept paths.
struct DensityOperator {
  Register reg;
  std::vector<int> kept_paths;
  std::vector<OccupationVector> basis;
  Eigen::MatrixXcd matrix;

  double trace() const;
  double purity() const;
  DensityOperator normalized() const;
  Eigen::VectorXd eigenvalues() const;
};

/// Merges duplicate vectors by summation and prunes tiny amplitudes.
/// Throws if a vector has the wrong length or everything prunes to zero.
PureState make_state(const Register& reg,
                     const std::vector<std::pair<OccupationVector, Complex>>& terms);

PureState vacuum(const Register& reg);
PureState single_photon(const Register& reg, ModeId mode, Complex amp = 1.0);

/// <a|b>, conjugate-linear in `a`. Registers must match.
Complex inner_product(const PureState& a, const PureState& b);

/// Tensor product; registers concatenate, b's paths shift up by a.reg().paths.
PureState tensor(const PureState& a, const PureState& b);

/// Product of two states on the same register occupying disjoint paths.
/// Throws on overlapping path indices.
PureState product(const PureState& a, const PureState& b);

/// Partial inner product <bra|ket> over the paths `bra` occupies; returns
/// the unnormalized relative state on the remaining paths.
PureState project_out(const PureState& bra, const PureState& ket);

/// Reduced density operator on `keep_paths`; trace equals state norm_sq.
/// `keep_paths` must be a nonempty proper subset of the register's paths.
DensityOperator partial_trace(const PureState& state,
                              const std::vector<int>& keep_paths);

/// <chi|rho|chi>. Expects rho normalized (trace 1) and chi normalized,
/// supported on rho's kept paths.
double fidelity(const DensityOperator& rho, const PureState& chi);

}  // namespace qtel
