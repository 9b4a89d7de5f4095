#include "qtel/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

namespace qtel {

int total_photons(const OccupationVector& occ) {
  int n = 0;
  for (int c : occ) n += c;
  return n;
}

int mode_index(const Register& reg, ModeId m) {
  if (m.path < 0 || m.path >= reg.paths || m.oam < 0 || m.oam >= reg.oam)
    throw std::invalid_argument("mode_index: mode outside register");
  return m.path * reg.oam + m.oam;
}

PureState PureState::from_terms(Register reg, TermMap terms) {
  PureState s;
  s.reg_ = reg;
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= kAmplitudeEps) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  s.terms_ = std::move(terms);
  double nsq = 0.0;
  bool first = true;
  for (const auto& [occ, amp] : s.terms_) {
    nsq += std::norm(amp);
    const int n = total_photons(occ);
    if (first) {
      s.photon_number_ = n;
      first = false;
    } else if (n != s.photon_number_) {
      s.number_definite_ = false;
    }
  }
  s.norm_sq_ = nsq;
  return s;
}

Complex PureState::amplitude(const OccupationVector& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

std::vector<int> PureState::occupied_paths() const {
  std::set<int> paths;
  for (const auto& [occ, amp] : terms_) {
    for (int p = 0; p < reg_.paths; ++p) {
      for (int l = 0; l < reg_.oam; ++l) {
        if (occ[p * reg_.oam + l] > 0) {
          paths.insert(p);
          break;
        }
      }
    }
  }
  return {paths.begin(), paths.end()};
}

PureState PureState::scaled(Complex factor) const {
  TermMap out = terms_;
  for (auto& [occ, amp] : out) amp *= factor;
  return from_terms(reg_, std::move(out));
}

PureState PureState::normalized() const {
  if (norm_sq_ <= 0.0)
    throw std::domain_error("normalized: zero state");
  return scaled(1.0 / std::sqrt(norm_sq_));
}

void PureState::dump(std::ostream& os) const {
  char buf[64];
  for (const auto& [occ, amp] : terms_) {
    for (int c : occ) os << c << ' ';
    std::snprintf(buf, sizeof(buf), ": %.17g %.17g\n", amp.real(), amp.imag());
    os << buf;
  }
}

double DensityOperator::trace() const {
  return matrix.trace().real();
}

double DensityOperator::purity() const {
  return (matrix * matrix).trace().real();
}

DensityOperator DensityOperator::normalized() const {
  const double tr = trace();
  if (tr <= 0.0)
    throw std::domain_error("DensityOperator::normalized: zero trace");
  DensityOperator out = *this;
  out.matrix /= tr;
  return out;
}

Eigen::VectorXd DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  return solver.eigenvalues();
}

PureState make_state(
    const Register& reg,
    const std::vector<std::pair<OccupationVector, Complex>>& terms) {
  if (terms.empty())
    throw std::invalid_argument("make_state: no terms");
  PureState::TermMap map;
  for (const auto& [occ, amp] : terms) {
    if (static_cast<int>(occ.size()) != reg.modes())
      throw std::invalid_argument("make_state: occupation vector length mismatch");
    for (int c : occ)
      if (c < 0) throw std::invalid_argument("make_state: negative count");
    map[occ] += amp;
  }
  PureState s = PureState::from_terms(reg, std::move(map));
  if (s.terms().empty())
    throw std::invalid_argument("make_state: all amplitudes vanish");
  return s;
}

PureState vacuum(const Register& reg) {
  return make_state(reg, {{OccupationVector(reg.modes(), 0), 1.0}});
}

PureState single_photon(const Register& reg, ModeId mode, Complex amp) {
  OccupationVector occ(reg.modes(), 0);
  occ[mode_index(reg, mode)] = 1;
  return make_state(reg, {{occ, amp}});
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (!(a.reg() == b.reg()))
    throw std::invalid_argument("inner_product: register mismatch");
  const bool a_smaller = a.term_count() <= b.term_count();
  const PureState& small = a_smaller ? a : b;
  const PureState& large = a_smaller ? b : a;
  Complex sum{0.0, 0.0};
  for (const auto& [occ, amp] : small.terms()) {
    const Complex other = large.amplitude(occ);
    if (a_smaller)
      sum += std::conj(amp) * other;
    else
      sum += std::conj(other) * amp;
  }
  return sum;
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.reg().oam != b.reg().oam)
    throw std::invalid_argument("tensor: OAM alphabets differ");
  const Register reg{a.reg().paths + b.reg().paths, a.reg().oam};
  PureState::TermMap out;
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      OccupationVector occ(reg.modes(), 0);
      std::copy(occ_a.begin(), occ_a.end(), occ.begin());
      std::copy(occ_b.begin(), occ_b.end(), occ.begin() + occ_a.size());
      out[std::move(occ)] += amp_a * amp_b;
    }
  }
  return PureState::from_terms(reg, std::move(out));
}

PureState product(const PureState& a, const PureState& b) {
  if (!(a.reg() == b.reg()))
    throw std::invalid_argument("product: register mismatch");
  const auto pa = a.occupied_paths();
  const auto pb = b.occupied_paths();
  std::vector<int> overlap;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument("product: overlapping path indices");
  PureState::TermMap out;
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      OccupationVector occ = occ_a;
      for (std::size_t m = 0; m < occ.size(); ++m) occ[m] += occ_b[m];
      out[std::move(occ)] += amp_a * amp_b;
    }
  }
  return PureState::from_terms(a.reg(), std::move(out));
}

PureState project_out(const PureState& bra, const PureState& ket) {
  if (!(bra.reg() == ket.reg()))
    throw std::invalid_argument("project_out: register mismatch");
  const Register& reg = ket.reg();
  const auto bra_paths = bra.occupied_paths();
  std::vector<bool> on_bra(reg.paths, false);
  for (int p : bra_paths) on_bra[p] = true;

  PureState::TermMap out;
  for (const auto& [occ, amp] : ket.terms()) {
    OccupationVector bra_part(reg.modes(), 0);
    OccupationVector rest(reg.modes(), 0);
    for (int p = 0; p < reg.paths; ++p) {
      for (int l = 0; l < reg.oam; ++l) {
        const int m = p * reg.oam + l;
        (on_bra[p] ? bra_part[m] : rest[m]) = occ[m];
      }
    }
    const Complex bra_amp = bra.amplitude(bra_part);
    if (std::abs(bra_amp) <= kAmplitudeEps) continue;
    out[std::move(rest)] += std::conj(bra_amp) * amp;
  }
  return PureState::from_terms(reg, std::move(out));
}

namespace {

void check_density_invariants(const DensityOperator& rho, double declared_trace) {
  const auto& m = rho.matrix;
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10)
    throw std::logic_error("partial_trace: result not Hermitian");
  if (std::abs(rho.trace() - declared_trace) > 1e-10)
    throw std::logic_error("partial_trace: trace mismatch");
  if (rho.eigenvalues().minCoeff() < -1e-8)
    throw std::logic_error("partial_trace: negative eigenvalue");
}

}  // namespace

DensityOperator partial_trace(const PureState& state,
                              const std::vector<int>& keep_paths) {
  const Register& reg = state.reg();
  if (keep_paths.empty())
    throw std::invalid_argument("partial_trace: empty keep set");
  std::set<int> keep(keep_paths.begin(), keep_paths.end());
  for (int p : keep)
    if (p < 0 || p >= reg.paths)
      throw std::invalid_argument("partial_trace: path outside register");
  if (static_cast<int>(keep.size()) >= reg.paths)
    throw std::invalid_argument("partial_trace: keep set must be a proper subset");

  // Group terms by the traced-out part, then accumulate outer products of
  // the kept parts within each group.
  std::map<OccupationVector, std::vector<std::pair<OccupationVector, Complex>>>
      groups;
  for (const auto& [occ, amp] : state.terms()) {
    OccupationVector kept(reg.modes(), 0);
    OccupationVector traced(reg.modes(), 0);
    for (int p = 0; p < reg.paths; ++p) {
      const bool is_kept = keep.count(p) > 0;
      for (int l = 0; l < reg.oam; ++l) {
        const int m = p * reg.oam + l;
        (is_kept ? kept[m] : traced[m]) = occ[m];
      }
    }
    groups[std::move(traced)].emplace_back(std::move(kept), amp);
  }

  std::set<OccupationVector> basis_set;
  for (const auto& [traced, parts] : groups)
    for (const auto& [kept, amp] : parts) basis_set.insert(kept);

  DensityOperator rho;
  rho.reg = reg;
  rho.kept_paths.assign(keep.begin(), keep.end());
  rho.basis.assign(basis_set.begin(), basis_set.end());
  std::map<OccupationVector, int> index;
  for (std::size_t i = 0; i < rho.basis.size(); ++i)
    index[rho.basis[i]] = static_cast<int>(i);

  const auto n = static_cast<Eigen::Index>(rho.basis.size());
  rho.matrix = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [traced, parts] : groups) {
    for (const auto& [occ_i, amp_i] : parts) {
      const int i = index.at(occ_i);
      for (const auto& [occ_j, amp_j] : parts) {
        rho.matrix(i, index.at(occ_j)) += amp_i * std::conj(amp_j);
      }
    }
  }
  check_density_invariants(rho, state.norm_sq());
  return rho;
}

double fidelity(const DensityOperator& rho, const PureState& chi) {
  if (!(chi.reg() == rho.reg))
    throw std::invalid_argument("fidelity: basis mismatch (registers differ)");
  std::set<int> keep(rho.kept_paths.begin(), rho.kept_paths.end());
  for (int p : chi.occupied_paths())
    if (keep.count(p) == 0)
      throw std::invalid_argument("fidelity: chi occupies paths outside rho");

  std::map<OccupationVector, int> index;
  for (std::size_t i = 0; i < rho.basis.size(); ++i)
    index[rho.basis[i]] = static_cast<int>(i);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rho.matrix.rows());
  for (const auto& [occ, amp] : chi.terms()) {
    auto it = index.find(occ);
    if (it != index.end()) v(it->second) = amp;
  }
  return (v.adjoint() * rho.matrix * v)(0, 0).real();
}

}  // namespace qtel
