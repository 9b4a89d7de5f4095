#include "qtel/bell_filter.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qtel/antisym.hpp"

namespace qtel {

namespace {

Eigen::MatrixXcd border_splitter(int d) {
  // S_d: transmissivity (d-1)/d between the first and last of d paths.
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(d, d);
  const double t = std::sqrt((d - 1.0) / d);
  const double r = std::sqrt(1.0 / d);
  s(0, 0) = t;
  s(0, d - 1) = -r;
  s(d - 1, 0) = r;
  s(d - 1, d - 1) = t;
  return s;
}

Eigen::MatrixXcd filter_matrix(int d, std::vector<double>& transmissivities) {
  if (d == 2) {
    transmissivities.push_back(0.5);
    return border_splitter(2);
  }
  transmissivities.push_back((d - 1.0) / d);
  Eigen::MatrixXcd inner = filter_matrix(d - 1, transmissivities);
  Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Identity(d, d);
  embedded.block(1, 1, d - 1, d - 1) = inner;
  return border_splitter(d) * embedded;
}

}  // namespace

BellFilterSpec bell_filter_unitary(int d) {
  if (d < 2 || d > 7)
    throw std::invalid_argument("bell_filter_unitary: need 2 <= d <= 7");
  BellFilterSpec spec;
  spec.d = d;
  std::vector<int> paths(d);
  std::iota(paths.begin(), paths.end(), 0);
  spec.unitary = make_mode_unitary(filter_matrix(d, spec.transmissivities),
                                   std::move(paths));
  auto [constant, etas] = check_sufficiency(spec.unitary);
  const double target = 1.0 / d;
  for (const Complex& eta : etas)
    if (std::abs(eta - target) > 1e-12)
      throw std::logic_error("bell_filter_unitary: eta condition violated");
  if (!constant)
    throw std::logic_error("bell_filter_unitary: eta not constant");
  return spec;
}

Complex cofactor(const Eigen::MatrixXcd& m, int i, int j) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols() || n < 2)
    throw std::invalid_argument("cofactor: need a square matrix of size >= 2");
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("cofactor: index out of range");
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      minor(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
  return sign * minor.determinant();
}

std::pair<bool, std::vector<Complex>> check_sufficiency(const ModeUnitary& u) {
  const int d = u.dim;
  if (d < 2)
    throw std::invalid_argument("check_sufficiency: need d >= 2");
  std::vector<Complex> etas(d);
  for (int k = 0; k < d; ++k)
    etas[k] = u.matrix(d - 1, k) * cofactor(u.matrix, d - 1, k);
  bool constant = true;
  for (int k = 1; k < d; ++k)
    if (std::abs(etas[k] - etas[0]) > 1e-10) constant = false;
  return {constant, etas};
}

PureState generalized_bell_state(const Register& reg, int d,
                                 GeneralizedBellIndex idx,
                                 const std::vector<int>& paths) {
  if (idx.m1 < 0 || idx.m1 >= d || idx.m2 < 0 || idx.m2 >= d)
    throw std::invalid_argument("generalized_bell_state: index out of range");
  if (static_cast<int>(paths.size()) != d)
    throw std::invalid_argument("generalized_bell_state: need d paths");
  const std::vector<int> a_paths(paths.begin(), paths.end() - 1);
  const int b_path = paths.back();

  PureState::TermMap out;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * j * idx.m1 / d;
    const Complex phase{std::cos(angle), std::sin(angle)};

    std::vector<int> minor_oams;
    for (int l = 0; l < d; ++l)
      if (l != j) minor_oams.push_back(l);
    const PureState a_state = determinant_state(reg, a_paths, minor_oams);

    const int b_oam = (j + idx.m2) % d;
    // Last-row cofactor sign keeps (0,0) equal to det(Lambda)|0>/sqrt(d!).
    const double b_sign = ((d - 1) + b_oam) % 2 == 0 ? 1.0 : -1.0;
    const Complex weight = phase * scale * b_sign;
    for (const auto& [occ, amp] : a_state.terms()) {
      OccupationVector with_b = occ;
      with_b[mode_index(reg, {b_path, b_oam})] += 1;
      out[std::move(with_b)] += amp * weight;
    }
  }
  return PureState::from_terms(reg, std::move(out));
}

std::pair<PureState, double> coincidence_project(
    const PureState& state, const std::vector<int>& watch_paths) {
  const Register& reg = state.reg();
  for (int p : watch_paths)
    if (p < 0 || p >= reg.paths)
      throw std::invalid_argument("coincidence_project: path outside register");
  PureState::TermMap kept;
  for (const auto& [occ, amp] : state.terms()) {
    bool coincident = true;
    for (int p : watch_paths) {
      int photons = 0;
      for (int l = 0; l < reg.oam; ++l) photons += occ[p * reg.oam + l];
      if (photons != 1) {
        coincident = false;
        break;
      }
    }
    if (coincident) kept[occ] = amp;
  }
  PureState survived = PureState::from_terms(reg, std::move(kept));
  const double probability =
      state.norm_sq() > 0.0 ? survived.norm_sq() / state.norm_sq() : 0.0;
  return {std::move(survived), probability};
}

}  // namespace qtel
