#include "qcap/clifford.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace qcap {

namespace {

// Global-phase canonical form: rotate so the largest-magnitude entry
// (first in row-major among near-ties) is real positive.
ComplexMatrix phase_canonical(const ComplexMatrix& u) {
  double best = 0.0;
  for (int r = 0; r < u.rows(); ++r)
    for (int c = 0; c < u.cols(); ++c) best = std::max(best, std::abs(u(r, c)));
  cplx anchor = 0.0;
  for (int r = 0; r < u.rows() && anchor == 0.0; ++r)
    for (int c = 0; c < u.cols(); ++c)
      if (std::abs(u(r, c)) > best - 1e-9) {
        anchor = u(r, c);
        break;
      }
  ComplexMatrix out = u;
  out *= std::conj(anchor) / std::abs(anchor);
  return out;
}

std::vector<long long> fingerprint(const ComplexMatrix& u) {
  std::vector<long long> key;
  key.reserve(2 * u.rows() * u.cols());
  for (int r = 0; r < u.rows(); ++r)
    for (int c = 0; c < u.cols(); ++c) {
      key.push_back(std::llround(u(r, c).real() * 1e6));
      key.push_back(std::llround(u(r, c).imag() * 1e6));
    }
  return key;
}

std::vector<ComplexMatrix> build_clifford_group() {
  const ComplexMatrix s(2, 2, {1, 0, 0, cplx(0, 1)});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2});

  std::vector<ComplexMatrix> group;
  std::map<std::vector<long long>, int> seen;
  std::deque<ComplexMatrix> frontier;

  auto insert = [&](const ComplexMatrix& u) {
    const ComplexMatrix canon = phase_canonical(u);
    if (seen.emplace(fingerprint(canon), 1).second) {
      group.push_back(canon);
      frontier.push_back(canon);
    }
  };

  insert(ComplexMatrix::identity(2));
  while (!frontier.empty()) {
    const ComplexMatrix u = frontier.front();
    frontier.pop_front();
    insert(s * u);
    insert(h * u);
  }
  if (group.size() != 24)
    throw std::logic_error("clifford_group: closure has wrong order");
  return group;
}

}  // namespace

const std::vector<ComplexMatrix>& clifford_group() {
  static const std::vector<ComplexMatrix> group = build_clifford_group();
  return group;
}

KrausChannel twirl(const KrausChannel& ch) {
  if (ch.in_dim != 2 || ch.out_dim != 2)
    throw std::invalid_argument("twirl: qubit channels only");
  const auto& group = clifford_group();
  const double scale = 1.0 / std::sqrt(static_cast<double>(group.size()));
  std::vector<ComplexMatrix> ops;
  ops.reserve(group.size() * ch.kraus.size());
  for (const auto& c : group) {
    const ComplexMatrix cd = c.dagger();
    for (const auto& a : ch.kraus) {
      ComplexMatrix op = cd * a * c;
      op *= scale;
      ops.push_back(std::move(op));
    }
  }
  return KrausChannel(std::move(ops));
}

double entanglement_fidelity(const KrausChannel& ch) {
  if (ch.in_dim != 2 || ch.out_dim != 2)
    throw std::invalid_argument("entanglement_fidelity: qubit channels only");
  double via_trace = 0.0;
  for (const auto& a : ch.kraus) via_trace += std::norm(0.5 * a.trace());

  // Independent route: overlap of the Choi state with |Omega>.
  const ChoiMatrix j = choi(ch);
  cplx via_choi = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) via_choi += j.matrix(i * 2 + i, k * 2 + k);
  via_choi *= 0.5;

  if (std::abs(via_trace - via_choi.real()) > 1e-12)
    throw std::runtime_error("entanglement_fidelity: trace and Choi routes disagree");
  return via_trace;
}

}  // namespace qcap
