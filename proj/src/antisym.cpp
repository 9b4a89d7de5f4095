#include "qtel/antisym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qtel {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int permutation_parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void validate_lambda(const Register& reg, const LambdaMatrix& lambda) {
  if (lambda.d < 2)
    throw std::invalid_argument("LambdaMatrix: d must be at least 2");
  if (static_cast<int>(lambda.paths.size()) != lambda.d ||
      static_cast<int>(lambda.oams.size()) != lambda.d)
    throw std::invalid_argument("LambdaMatrix: path/OAM list size mismatch");
  std::set<int> paths(lambda.paths.begin(), lambda.paths.end());
  std::set<int> oams(lambda.oams.begin(), lambda.oams.end());
  if (static_cast<int>(paths.size()) != lambda.d)
    throw std::invalid_argument("LambdaMatrix: duplicate paths");
  if (static_cast<int>(oams.size()) != lambda.d)
    throw std::invalid_argument("LambdaMatrix: duplicate OAM labels");
  for (int p : lambda.paths)
    if (p < 0 || p >= reg.paths)
      throw std::invalid_argument("LambdaMatrix: path outside register");
  for (int l : lambda.oams)
    if (l < 0 || l >= reg.oam)
      throw std::invalid_argument("LambdaMatrix: OAM label outside register");
}

}  // namespace

PureState determinant_state(const Register& reg, const std::vector<int>& paths,
                            const std::vector<int>& oams) {
  const int k = static_cast<int>(paths.size());
  if (k == 0 || paths.size() != oams.size())
    throw std::invalid_argument("determinant_state: row/column size mismatch");
  const double scale = 1.0 / std::sqrt(factorial(k));
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  PureState::TermMap terms;
  do {
    OccupationVector occ(reg.modes(), 0);
    for (int r = 0; r < k; ++r)
      occ[mode_index(reg, {paths[r], oams[perm[r]]})] += 1;
    terms[std::move(occ)] += permutation_parity(perm) * scale;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PureState::from_terms(reg, std::move(terms));
}

PureState antisymmetric_state(const Register& reg, const LambdaMatrix& lambda) {
  validate_lambda(reg, lambda);
  if (lambda.d > 7)
    throw std::invalid_argument("antisymmetric_state: d above desk-scale bound 7");
  return determinant_state(reg, lambda.paths, lambda.oams);
}

std::uint64_t antisym_dimension(int d, int n) {
  if (n < 0 || n > d)
    throw std::invalid_argument("antisym_dimension: need 0 <= n <= d");
  std::uint64_t result = 1;
  for (int k = 1; k <= n; ++k) {
    result = result * static_cast<std::uint64_t>(d - n + k) / k;
  }
  return result;
}

std::vector<std::vector<int>> subsets_colex(int d, int k) {
  if (k < 0 || k > d)
    throw std::invalid_argument("subsets_colex: need 0 <= k <= d");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  // Colex: recurse on the largest element last.
  auto emit = [&](auto&& self, int largest_max, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int top = remaining - 1; top <= largest_max; ++top) {
      cur[remaining - 1] = top;
      self(self, top - 1, remaining - 1);
    }
  };
  emit(emit, d - 1, k);
  return out;
}

SchmidtDecomposition laplace_partition(const Register& reg,
                                       const LambdaMatrix& lambda,
                                       const PartitionSpec& part) {
  validate_lambda(reg, lambda);
  const int d = lambda.d;
  const int n = part.n;
  if (n < 1 || n > d - 1)
    throw std::invalid_argument("laplace_partition: need 1 <= n <= d-1");
  if (static_cast<int>(part.side_a_paths.size()) != n ||
      static_cast<int>(part.side_b_paths.size()) != d - n)
    throw std::invalid_argument("laplace_partition: side sizes mismatch");

  // Row positions of each side within the LambdaMatrix, ascending; the
  // Laplace sign uses the positions, the minors use paths in that order.
  auto positions_of = [&](const std::vector<int>& side) {
    std::vector<int> rows;
    for (int p : side) {
      auto it = std::find(lambda.paths.begin(), lambda.paths.end(), p);
      if (it == lambda.paths.end())
        throw std::invalid_argument("laplace_partition: side path not in Lambda");
      rows.push_back(static_cast<int>(it - lambda.paths.begin()));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const std::vector<int> rows_a = positions_of(part.side_a_paths);
  const std::vector<int> rows_b = positions_of(part.side_b_paths);
  if (rows_a.size() + rows_b.size() != static_cast<std::size_t>(d) ||
      [&] {
        std::set<int> all(rows_a.begin(), rows_a.end());
        all.insert(rows_b.begin(), rows_b.end());
        return static_cast<int>(all.size()) != d;
      }())
    throw std::invalid_argument("laplace_partition: sides do not partition Lambda");

  const int row_sum_a = std::accumulate(rows_a.begin(), rows_a.end(), 0);

  SchmidtDecomposition out;
  const auto subsets = subsets_colex(d, n);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(antisym_dimension(d, n)));
  for (const auto& cols_a : subsets) {
    std::vector<int> cols_b;
    for (int c = 0; c < d; ++c)
      if (!std::binary_search(cols_a.begin(), cols_a.end(), c)) cols_b.push_back(c);

    const int col_sum_a = std::accumulate(cols_a.begin(), cols_a.end(), 0);
    const int sign = (row_sum_a + col_sum_a) % 2 == 0 ? 1 : -1;

    auto minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
      std::vector<int> paths, oams;
      for (int r : rows) paths.push_back(lambda.paths[r]);
      for (int c : cols) oams.push_back(lambda.oams[c]);
      return determinant_state(reg, paths, oams);
    };
    out.coefficients.push_back(coeff);
    out.signs.push_back(sign);
    out.side_a_states.push_back(minor(rows_a, cols_a));
    out.side_b_states.push_back(minor(rows_b, cols_b));
  }
  return out;
}

std::vector<double> schmidt_spectrum(const PureState& state,
                                     const std::vector<int>& side_a_paths) {
  const Register& reg = state.reg();
  std::set<int> side_a(side_a_paths.begin(), side_a_paths.end());
  const auto occupied = state.occupied_paths();
  bool any_a = false, any_b = false;
  for (int p : occupied) (side_a.count(p) ? any_a : any_b) = true;
  if (!any_a || !any_b)
    throw std::invalid_argument("schmidt_spectrum: trivial bipartition");

  std::map<OccupationVector, int> index_a, index_b;
  std::vector<std::tuple<int, int, Complex>> entries;
  for (const auto& [occ, amp] : state.terms()) {
    OccupationVector part_a(reg.modes(), 0), part_b(reg.modes(), 0);
    for (int p = 0; p < reg.paths; ++p) {
      const bool is_a = side_a.count(p) > 0;
      for (int l = 0; l < reg.oam; ++l) {
        const int m = p * reg.oam + l;
        (is_a ? part_a[m] : part_b[m]) = occ[m];
      }
    }
    const int ia = index_a.emplace(part_a, static_cast<int>(index_a.size())).first->second;
    const int ib = index_b.emplace(part_b, static_cast<int>(index_b.size())).first->second;
    entries.emplace_back(ia, ib, amp);
  }

  Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(index_a.size()), static_cast<Eigen::Index>(index_b.size()));
  for (const auto& [ia, ib, amp] : entries) coeffs(ia, ib) = amp;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeffs);
  std::vector<double> values(svd.singularValues().data(),
                             svd.singularValues().data() + svd.singularValues().size());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace qtel
