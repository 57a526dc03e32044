// Copyright 2026 The pathid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pathid/oracle/dense_evolution.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <complex>
#include <functional>
#include <variant>

#include "pathid/errors.hpp"

namespace pathid::oracle {
namespace {

using Matrix = Eigen::MatrixXcd;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void enumerate(std::size_t modes, int budget, std::vector<int>& prefix,
               std::vector<FockState>& out) {
  if (prefix.size() == modes) {
    out.emplace_back(prefix);
    return;
  }
  for (int n = 0; n <= budget; ++n) {
    prefix.push_back(n);
    enumerate(modes, budget - n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

DenseEvolution::DenseEvolution(const ModeRegistry& registry, int max_photons)
    : registry_(registry), max_photons_(max_photons) {
  if (max_photons < 0) throw EvolutionError("dense oracle: negative photon cap");
  std::vector<int> prefix;
  enumerate(registry.size(), max_photons, prefix, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::vector<Amplitude> DenseEvolution::element_matrix(const Element& element,
                                                      const Bindings& bindings) const {
  validate_element(element, registry_);
  const auto dim = static_cast<Eigen::Index>(basis_.size());

  // Matrix of a_i^dag a_j style operators: f maps a basis state to
  // (target state, coefficient) or nothing.
  using Term = std::function<bool(const FockState&, FockState&, double&)>;
  auto operator_matrix = [&](const Term& term) {
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      FockState target;
      double coef = 0.0;
      if (!term(basis_[static_cast<std::size_t>(col)], target, coef)) continue;
      auto it = index_.find(target);
      if (it == index_.end()) continue;
      m(static_cast<Eigen::Index>(it->second), col) += coef;
    }
    return m;
  };
  auto hop = [&](std::size_t to, std::size_t from) {  // a_to^dag a_from
    return operator_matrix([=](const FockState& s, FockState& t, double& c) {
      if (s[from] == 0) return false;
      c = std::sqrt(static_cast<double>(s[from]));
      t = s.shifted(from, -1);
      c *= std::sqrt(static_cast<double>(t[to] + 1));
      t = t.shifted(to, 1);
      return true;
    });
  };
  auto pair_create = [&](std::size_t a, std::size_t b) {  // a^dag b^dag
    return operator_matrix([=](const FockState& s, FockState& t, double& c) {
      c = std::sqrt(static_cast<double>((s[a] + 1) * (s[b] + 1)));
      t = s.shifted(a, 1).shifted(b, 1);
      return true;
    });
  };
  auto index = [&](const std::string& label) { return registry_.index(label); };
  const Amplitude i_unit(0.0, 1.0);

  Matrix u = std::visit(
      Overloaded{
          [&](const PhaseShifter& e) -> Matrix {
            const double theta = e.phase.evaluate(bindings);
            const std::size_t m = index(e.mode);
            Matrix out = Matrix::Zero(dim, dim);
            for (Eigen::Index k = 0; k < dim; ++k) {
              out(k, k) = std::polar(1.0, theta * basis_[static_cast<std::size_t>(k)][m]);
            }
            return out;
          },
          [&](const BeamSplitter& e) -> Matrix {
            const double s = std::acos(std::sqrt(e.transmissivity));
            const std::size_t a = index(e.first), b = index(e.second);
            return (i_unit * s * (hop(a, b) + hop(b, a))).exp();
          },
          [&](const LossChannel& e) -> Matrix {
            const double s = std::acos(std::sqrt(e.efficiency));
            const std::size_t a = index(e.mode), b = index(e.loss_mode);
            return (i_unit * s * (hop(a, b) + hop(b, a))).exp();
          },
          [&](const ModeSwap& e) -> Matrix {
            const std::size_t a = index(e.first), b = index(e.second);
            return operator_matrix([=](const FockState& s, FockState& t, double& c) {
              t = s.with(a, s[b]).with(b, s[a]);
              c = 1.0;
              return true;
            });
          },
          [&](const PairSourcePerturbative& e) -> Matrix {
            const Amplitude gain = std::polar(e.gain, e.pump_phase.evaluate(bindings));
            const Matrix x = gain * pair_create(index(e.mode_a), index(e.mode_b));
            Matrix term = Matrix::Identity(dim, dim);
            Matrix out = term;
            for (int j = 1; j <= e.order; ++j) {
              term = (x * term) / static_cast<double>(j);
              out += term;
            }
            return out;
          },
          [&](const PairSourceExactSPDC& e) -> Matrix {
            const std::size_t p = index(e.pump), a = index(e.mode_a), b = index(e.mode_b);
            // sigma^- a^dag b^dag: pump 1 -> 0, pair created.
            const Matrix down = operator_matrix([=](const FockState& s, FockState& t,
                                                     double& c) {
              if (s[p] != 1) return false;
              c = std::sqrt(static_cast<double>((s[a] + 1) * (s[b] + 1)));
              t = s.with(p, 0).shifted(a, 1).shifted(b, 1);
              return true;
            });
            const Matrix generator = e.gain * (down - down.adjoint());
            return generator.exp();
          },
      },
      element);

  std::vector<Amplitude> out(static_cast<std::size_t>(dim * dim));
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) out[static_cast<std::size_t>(r * dim + c)] = u(r, c);
  }
  return out;
}

std::map<FockState, Amplitude> DenseEvolution::evolve(const Circuit& circuit,
                                                      const FockState& input,
                                                      const Bindings& bindings) const {
  if (!(circuit.registry() == registry_)) {
    throw EvolutionError("dense oracle: circuit registry differs from the oracle's");
  }
  auto it = index_.find(input);
  if (it == index_.end()) throw EvolutionError("dense oracle: input outside the basis");
  circuit.require_bound(bindings);
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(static_cast<Eigen::Index>(it->second)) = 1.0;
  for (const auto& element : circuit.elements()) {
    const auto flat = element_matrix(element, bindings);
    const Eigen::Map<const Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>
        u(flat.data(), dim, dim);
    psi = u * psi;
  }
  std::map<FockState, Amplitude> out;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (psi(k) != Amplitude{}) out.emplace(basis_[static_cast<std::size_t>(k)], psi(k));
  }
  return out;
}

double max_deviation(const std::map<FockState, Amplitude>& dense, const StateVector& sparse) {
  double worst = 0.0;
  for (const auto& [basis, amp] : dense) {
    worst = std::max(worst, std::abs(amp - sparse.amplitude(basis)));
  }
  for (const auto& [basis, amp] : sparse.amplitudes()) {
    if (!dense.contains(basis)) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

}  // namespace pathid::oracle
