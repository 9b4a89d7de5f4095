#include "qtel/linear_optics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qtel {

namespace {

double sqrt_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return std::sqrt(f);
}

}  // namespace

ModeUnitary make_mode_unitary(Eigen::MatrixXcd matrix,
                              std::vector<int> acted_paths) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("make_mode_unitary: matrix not square");
  const int dim = static_cast<int>(matrix.rows());
  if (static_cast<int>(acted_paths.size()) != dim)
    throw std::invalid_argument("make_mode_unitary: acted_paths size mismatch");
  std::set<int> distinct(acted_paths.begin(), acted_paths.end());
  if (static_cast<int>(distinct.size()) != dim)
    throw std::invalid_argument("make_mode_unitary: duplicate acted paths");
  const Eigen::MatrixXcd gram = matrix.adjoint() * matrix;
  const double dev =
      (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw std::invalid_argument("make_mode_unitary: matrix not unitary");
  return ModeUnitary{dim, std::move(matrix), std::move(acted_paths)};
}

ModeUnitary beam_splitter(const BeamSplitterSpec& spec, int total_paths) {
  if (spec.transmissivity <= 0.0 || spec.transmissivity >= 1.0)
    throw std::invalid_argument("beam_splitter: transmissivity outside (0,1)");
  if (spec.path_a == spec.path_b)
    throw std::invalid_argument("beam_splitter: paths coincide");
  if (spec.path_a < 0 || spec.path_a >= total_paths || spec.path_b < 0 ||
      spec.path_b >= total_paths)
    throw std::invalid_argument("beam_splitter: path outside range");
  const double t = std::sqrt(spec.transmissivity);
  const double r = std::sqrt(1.0 - spec.transmissivity);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(total_paths, total_paths);
  m(spec.path_a, spec.path_a) = t;
  m(spec.path_a, spec.path_b) = -r;
  m(spec.path_b, spec.path_a) = r;
  m(spec.path_b, spec.path_b) = t;
  std::vector<int> paths(total_paths);
  std::iota(paths.begin(), paths.end(), 0);
  return make_mode_unitary(std::move(m), std::move(paths));
}

ModeUnitary compose(const ModeUnitary& u, const ModeUnitary& v) {
  if (u.acted_paths != v.acted_paths)
    throw std::invalid_argument("compose: acted path sets differ");
  return make_mode_unitary(u.matrix * v.matrix, u.acted_paths);
}

PureState apply_unitary(const ModeUnitary& u, const PureState& state) {
  const Register& reg = state.reg();
  if (!state.number_definite())
    throw std::invalid_argument("apply_unitary: state not number-definite");
  std::vector<int> local_of_path(reg.paths, -1);
  for (int i = 0; i < u.dim; ++i) {
    const int p = u.acted_paths[i];
    if (p < 0 || p >= reg.paths)
      throw std::invalid_argument("apply_unitary: acted path outside register");
    local_of_path[p] = i;
  }

  PureState::TermMap out;
  for (const auto& [occ, amp] : state.terms()) {
    // Normalization bookkeeping only involves acted modes; spectator modes
    // keep their factors.
    double in_norm = 1.0;
    OccupationVector base = occ;
    std::vector<std::pair<int, int>> photons;  // (local input path, oam)
    for (int p = 0; p < reg.paths; ++p) {
      if (local_of_path[p] < 0) continue;
      for (int l = 0; l < reg.oam; ++l) {
        const int m = p * reg.oam + l;
        const int n = occ[m];
        if (n == 0) continue;
        in_norm *= sqrt_factorial(n);
        base[m] = 0;
        for (int k = 0; k < n; ++k) photons.emplace_back(local_of_path[p], l);
      }
    }

    // Expand the product over photons one factor at a time, accumulating
    // monomials of the output creation operators.
    std::map<OccupationVector, Complex> monomials{{base, amp / in_norm}};
    for (const auto& [j_local, oam] : photons) {
      std::map<OccupationVector, Complex> next;
      for (const auto& [part, coeff] : monomials) {
        for (int i_local = 0; i_local < u.dim; ++i_local) {
          const Complex entry = u.matrix(i_local, j_local);
          if (std::abs(entry) <= kAmplitudeEps) continue;
          OccupationVector grown = part;
          grown[u.acted_paths[i_local] * reg.oam + oam] += 1;
          next[std::move(grown)] += coeff * entry;
        }
      }
      monomials = std::move(next);
    }

    for (const auto& [result, coeff] : monomials) {
      double out_norm = 1.0;
      for (int i = 0; i < u.dim; ++i) {
        const int p = u.acted_paths[i];
        for (int l = 0; l < reg.oam; ++l) out_norm *= sqrt_factorial(result[p * reg.oam + l]);
      }
      out[result] += coeff * out_norm;
    }
  }
  return PureState::from_terms(reg, std::move(out));
}

Complex transition_amplitude(const ModeUnitary& u, const Register& reg,
                             const OccupationVector& input,
                             const OccupationVector& output) {
  if (static_cast<int>(input.size()) != reg.modes() ||
      static_cast<int>(output.size()) != reg.modes())
    throw std::invalid_argument("transition_amplitude: vector length mismatch");
  std::vector<int> local_of_path(reg.paths, -1);
  for (int i = 0; i < u.dim; ++i) local_of_path[u.acted_paths[i]] = i;

  // Spectator modes must match exactly; the unitary cannot change them.
  for (int p = 0; p < reg.paths; ++p) {
    if (local_of_path[p] >= 0) continue;
    for (int l = 0; l < reg.oam; ++l) {
      const int m = p * reg.oam + l;
      if (input[m] != output[m]) return {0.0, 0.0};
    }
  }

  Complex result{1.0, 0.0};
  for (int l = 0; l < reg.oam; ++l) {
    std::vector<int> in_counts(u.dim, 0), out_counts(u.dim, 0);
    for (int i = 0; i < u.dim; ++i) {
      const int m = u.acted_paths[i] * reg.oam + l;
      in_counts[i] = input[m];
      out_counts[i] = output[m];
    }
    const int n_in = std::accumulate(in_counts.begin(), in_counts.end(), 0);
    const int n_out = std::accumulate(out_counts.begin(), out_counts.end(), 0);
    if (n_in != n_out) return {0.0, 0.0};
    if (n_in == 0) continue;

    // Rows repeat per output counts, columns per input counts.
    Eigen::MatrixXcd sub(n_in, n_in);
    int row = 0;
    for (int i = 0; i < u.dim; ++i) {
      for (int a = 0; a < out_counts[i]; ++a, ++row) {
        int col = 0;
        for (int j = 0; j < u.dim; ++j)
          for (int b = 0; b < in_counts[j]; ++b, ++col) sub(row, col) = u.matrix(i, j);
      }
    }
    double norm = 1.0;
    for (int c : in_counts) norm *= sqrt_factorial(c);
    for (int c : out_counts) norm *= sqrt_factorial(c);
    result *= permanent(sub) / norm;
  }
  return result;
}

Complex permanent(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("permanent: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n > 12)
    throw std::invalid_argument("permanent: size above desk-scale bound 12");
  if (n == 0) return {1.0, 0.0};

  // Ryser: perm(A) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} A_ij,
  // visiting subsets in Gray-code order so each step updates one column.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  Complex total{0.0, 0.0};
  unsigned prev = 0;
  for (unsigned k = 1; k < (1u << n); ++k) {
    const unsigned gray = k ^ (k >> 1);
    const unsigned changed = gray ^ prev;
    const int j = std::countr_zero(changed);
    if (gray & changed)
      row_sums += m.col(j);
    else
      row_sums -= m.col(j);
    prev = gray;

    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    const int bits = std::popcount(gray);
    total += (bits % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return (n % 2 == 0 ? 1.0 : -1.0) * total;
}

Complex permanent_naive(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("permanent_naive: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n > 6)
    throw std::invalid_argument("permanent_naive: size above oracle bound 6");
  if (n == 0) return {1.0, 0.0};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{0.0, 0.0};
  do {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace qtel
