// Copyright 2026 The sptchain Authors
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

#include "sptchain/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sptchain/kernels.hpp"

namespace sptchain {

namespace {

using Vec = std::vector<cplx>;

constexpr double kDegeneracyRtol = 1e-8;
constexpr double kSymmetryCheckTol = 1e-8;

const kernels::KernelTable& K() { return kernels::active(); }

// Group-averaging projector onto a joint eigenspace of the generators,
// prod_i (I + s_i S_i)/2, expanded as a signed average over all products.
struct SectorProjector {
  std::vector<PauliString> elements;  // the full group, identity included
  std::vector<double> signs;
  double scale = 1.0;

  static SectorProjector from_generators(int n, const std::vector<PauliString>& syms,
                                         const std::vector<int>* sector = nullptr) {
    if (syms.size() > 16) throw std::invalid_argument("too many symmetry generators");
    SectorProjector p;
    for (uint64_t pick = 0; pick < (1ull << syms.size()); ++pick) {
      PauliString el(n);
      int sign = 1;
      for (size_t i = 0; i < syms.size(); ++i) {
        if ((pick >> i) & 1) {
          el *= syms[i];
          if (sector != nullptr) sign *= (*sector)[i];
        }
      }
      p.elements.push_back(el);
      p.signs.push_back(sign);
    }
    p.scale = 1.0 / static_cast<double>(p.elements.size());
    return p;
  }

  void apply(const Vec& in, Vec& out) const {
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (size_t i = 0; i < elements.size(); ++i) {
      const PauliString& el = elements[i];
      K().pauli_term(out.data(), in.data(), in.size(), el.x_mask(), el.z_mask(),
                     i_pow[el.phase()] * (scale * signs[i]));
    }
  }
};

struct MatvecContext {
  const PauliSumOperator* h;
  const SectorProjector* proj;  // nullptr when unrestricted
  mutable Vec scratch;

  size_t dim() const { return size_t{1} << h->n; }

  // out = P H in (or H in): the operator the Krylov space is built for.
  void operator()(const Vec& in, Vec& out) const {
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (const auto& [coeff, op] : h->terms) {
      const double w = op.phase() == 2 ? -coeff : coeff;
      K().pauli_term(out.data(), in.data(), in.size(), op.x_mask(), op.z_mask(), cplx{w, 0.0});
    }
    if (proj != nullptr) {
      scratch.resize(out.size());
      proj->apply(out, scratch);
      out.swap(scratch);
    }
  }
};

double norm_of(const Vec& v) { return std::sqrt(K().norm_sq(v.data(), v.size())); }

void normalize(Vec& v) {
  const double nrm = norm_of(v);
  K().scale(v.data(), v.size(), cplx{1.0 / nrm, 0.0});
}

// w -= sum_u <u, w> u over both vector sets, run twice; classic full
// reorthogonalization.
void orthogonalize(Vec& w, const std::vector<Vec>& locked, const std::vector<Vec>& basis,
                   size_t basis_count) {
  for (int rep = 0; rep < 2; ++rep) {
    for (const Vec& u : locked) {
      const cplx c = K().dot(u.data(), w.data(), w.size());
      K().axpy(w.data(), u.data(), w.size(), -c);
    }
    for (size_t i = 0; i < basis_count; ++i) {
      const cplx c = K().dot(basis[i].data(), w.data(), w.size());
      K().axpy(w.data(), basis[i].data(), w.size(), -c);
    }
  }
}

// Portable deterministic start vector: raw mt19937_64 bits mapped to
// [-1, 1) doubles, so results do not depend on the standard library's
// distribution implementations.
Vec random_vector(size_t dim, uint64_t seed, int pass, int attempt) {
  std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ull + 0x100000001ull * pass + attempt + 1);
  Vec v(dim);
  auto unit = [&gen]() { return 2.0 * ((gen() >> 11) * 0x1.0p-53) - 1.0; };
  for (auto& c : v) c = cplx{unit(), unit()};
  return v;
}

struct PassResult {
  double theta = 0.0;
  Vec x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Lowest Ritz pair of the (projected) operator restricted to the orthogonal
// complement of `locked`, restarting from the best Ritz vector until the
// true residual passes tol.
PassResult lanczos_lowest(const MatvecContext& A, const std::vector<Vec>& locked, Vec start,
                          double tol, const LanczosOptions& opts) {
  const size_t dim = A.dim();
  const size_t m_cap = std::min<size_t>(std::max(2, opts.krylov_dim), dim - locked.size());
  PassResult out;
  out.x = std::move(start);

  std::vector<Vec> basis;
  Vec w(dim);
  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    basis.clear();
    basis.push_back(out.x);
    std::vector<double> alphas, betas;
    bool breakdown = false;
    for (size_t j = 0; j < m_cap; ++j) {
      A(basis[j], w);
      const double alpha = K().dot(basis[j].data(), w.data(), dim).real();
      alphas.push_back(alpha);
      K().axpy(w.data(), basis[j].data(), dim, cplx{-alpha, 0.0});
      if (j > 0) K().axpy(w.data(), basis[j - 1].data(), dim, cplx{-betas[j - 1], 0.0});
      orthogonalize(w, locked, basis, basis.size());
      const double beta = norm_of(w);
      ++out.iterations;
      if (beta < 1e-13) {
        breakdown = true;  // invariant subspace reached
        break;
      }
      if (j + 1 < m_cap) {
        betas.push_back(beta);
        K().scale(w.data(), dim, cplx{1.0 / beta, 0.0});
        basis.push_back(w);
      }
    }

    const int steps = static_cast<int>(alphas.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
    for (int i = 0; i < steps; ++i) {
      tri(i, i) = alphas[i];
      if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = betas[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const Eigen::VectorXd y = es.eigenvectors().col(0);

    std::fill(out.x.begin(), out.x.end(), cplx{0.0, 0.0});
    for (int i = 0; i < steps; ++i) {
      K().axpy(out.x.data(), basis[i].data(), dim, cplx{y(i), 0.0});
    }
    normalize(out.x);

    A(out.x, w);
    out.theta = K().dot(out.x.data(), w.data(), dim).real();
    K().axpy(w.data(), out.x.data(), dim, cplx{-out.theta, 0.0});
    out.residual = norm_of(w);
    if (out.residual < tol) {
      out.converged = true;
      return out;
    }
    if (breakdown) {
      // The Krylov space was exhausted but the residual still misses tol;
      // reseed with a perturbation instead of cycling on the same space.
      Vec bump = random_vector(dim, opts.seed ^ 0xB5EED, restart, 0);
      K().axpy(out.x.data(), bump.data(), dim, cplx{1e-6, 0.0});
      orthogonalize(out.x, locked, basis, 0);
      normalize(out.x);
    }
  }
  return out;
}

int count_degenerate(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) return 0;
  const double tol = kDegeneracyRtol * std::max(1.0, std::abs(eigenvalues.front()));
  int count = 0;
  for (double e : eigenvalues) {
    if (e - eigenvalues.front() <= tol) ++count;
  }
  return count;
}

StateVector to_state(int n, Vec v) {
  StateVector s;
  s.n = n;
  s.amp = std::move(v);
  return s;
}

// Shared driver: k deflated passes against an optionally projected matvec.
SpectrumResult run_lanczos(const PauliSumOperator& h, const SectorProjector* proj, int k,
                           double tol, const LanczosOptions& opts) {
  const size_t dim = size_t{1} << h.n;
  if (k < 1 || static_cast<size_t>(k) > dim) {
    throw std::invalid_argument("eigenpair count must be in [1, 2^n]");
  }
  MatvecContext A{&h, proj, {}};
  std::vector<Vec> locked;
  std::vector<double> thetas;
  SpectrumResult result;
  result.converged = true;

  for (int pass = 0; pass < k; ++pass) {
    Vec v0;
    bool seeded = false;
    for (int attempt = 0; attempt < 6 && !seeded; ++attempt) {
      if (pass == 0 && attempt == 0 && opts.warm_start != nullptr) {
        if (opts.warm_start->n != h.n) throw std::invalid_argument("warm start size mismatch");
        v0 = opts.warm_start->amp;
      } else {
        v0 = random_vector(dim, opts.seed, pass, attempt);
      }
      if (proj != nullptr) {
        Vec tmp(dim);
        proj->apply(v0, tmp);
        v0.swap(tmp);
      }
      orthogonalize(v0, locked, {}, 0);
      const double nrm = norm_of(v0);
      if (nrm > 1e-6) {
        K().scale(v0.data(), dim, cplx{1.0 / nrm, 0.0});
        seeded = true;
      }
    }
    if (!seeded) {
      throw std::runtime_error(proj != nullptr
                                   ? "projector annihilates every start vector"
                                   : "could not seed an independent start vector");
    }
    PassResult pr = lanczos_lowest(A, locked, std::move(v0), tol, opts);
    result.iterations += pr.iterations;
    result.converged = result.converged && pr.converged;
    thetas.push_back(pr.theta);
    locked.push_back(std::move(pr.x));
  }

  std::vector<size_t> order(thetas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return thetas[a] < thetas[b]; });
  for (size_t i : order) {
    result.eigenvalues.push_back(thetas[i]);
    result.eigenvectors.push_back(to_state(h.n, std::move(locked[i])));
  }
  result.degeneracy = count_degenerate(result.eigenvalues);
  return result;
}

}  // namespace

SpectrumResult lowest_eigenpairs(const PauliSumOperator& h, int k, double tol,
                                 LanczosOptions opts) {
  opts.tol = tol;
  return run_lanczos(h, nullptr, k, tol, opts);
}

Eigen::MatrixXcd dense_matrix(const PauliSumOperator& h) {
  if (h.n > 12) throw std::invalid_argument("dense matrix limited to n <= 12");
  const size_t dim = size_t{1} << h.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [coeff, op] : h.terms) {
    const double w = op.phase() == 2 ? -coeff : coeff;
    for (size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & op.z_mask()) & 1) ? -w : w;
      m(b ^ op.x_mask(), b) += s;
    }
  }
  return m;
}

SpectrumResult dense_spectrum(const PauliSumOperator& h) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  SpectrumResult result;
  result.converged = true;
  const size_t dim = m.rows();
  for (size_t i = 0; i < dim; ++i) {
    result.eigenvalues.push_back(es.eigenvalues()(i));
    StateVector v(h.n);
    Eigen::VectorXcd::Map(v.amp.data(), dim) = es.eigenvectors().col(i);
    result.eigenvectors.push_back(std::move(v));
  }
  result.degeneracy = count_degenerate(result.eigenvalues);
  return result;
}

namespace {

void validate_symmetries(const PauliSumOperator& h, const std::vector<PauliString>& syms) {
  for (const PauliString& s : syms) {
    if (!s.is_hermitian()) throw std::invalid_argument("symmetry generator must be Hermitian");
    for (const auto& [coeff, op] : h.terms) {
      if (!commutes(s, op)) {
        throw std::invalid_argument("symmetry generator does not commute with the operator");
      }
    }
  }
  for (size_t i = 0; i < syms.size(); ++i) {
    for (size_t j = i + 1; j < syms.size(); ++j) {
      if (!commutes(syms[i], syms[j])) {
        throw std::invalid_argument("symmetry generators must commute");
      }
    }
  }
}

GroundStateResult ground_state_impl(const PauliSumOperator& h,
                                    const std::vector<PauliString>& syms,
                                    const std::vector<int>* sector, LanczosOptions opts) {
  SpectrumResult spec;
  if (syms.empty()) {
    spec = run_lanczos(h, nullptr, 1, opts.tol, opts);
  } else {
    validate_symmetries(h, syms);
    const SectorProjector proj = SectorProjector::from_generators(h.n, syms, sector);
    spec = run_lanczos(h, &proj, 1, opts.tol, opts);
  }
  GroundStateResult out;
  out.energy = spec.eigenvalues.front();
  out.state = std::move(spec.eigenvectors.front());
  out.converged = spec.converged;
  out.iterations = spec.iterations;
  return out;
}

}  // namespace

GroundStateResult ground_state(const PauliSumOperator& h,
                               const std::vector<PauliString>& project_syms,
                               LanczosOptions opts) {
  return ground_state_impl(h, project_syms, nullptr, opts);
}

StateVector symmetric_ground_state(const PauliSumOperator& h,
                                   const std::vector<PauliString>& syms, double tol,
                                   LanczosOptions opts) {
  opts.tol = tol;
  GroundStateResult res = ground_state(h, syms, opts);
  for (const PauliString& s : syms) {
    StateVector sv = apply_pauli(s, res.state);
    K().axpy(sv.amp.data(), res.state.amp.data(), sv.dim(), cplx{-1.0, 0.0});
    if (norm_of(sv.amp) > kSymmetryCheckTol) {
      throw std::runtime_error("returned state is not symmetric under " + s.str());
    }
  }
  return std::move(res.state);
}

SectorResolvedResult sector_resolved_ground(const PauliSumOperator& h,
                                            const std::vector<PauliString>& syms,
                                            LanczosOptions sym_opts, LanczosOptions any_opts) {
  GroundStateResult sym = ground_state_impl(h, syms, nullptr, sym_opts);
  GroundStateResult any = ground_state_impl(h, {}, nullptr, any_opts);

  SectorResolvedResult out;
  out.ground_energy = any.energy;
  out.symmetric_energy = sym.energy;
  out.converged = sym.converged && any.converged;
  out.iterations = sym.iterations + any.iterations;

  const double tie = 1e-6 * std::max(1.0, std::abs(any.energy));
  if (sym.energy <= any.energy + tie) {
    out.state = sym.state;
  } else {
    // The unique global ground carries definite symmetry eigenvalues; read
    // them off and keep that state, re-solving in its sector only if the
    // eigenvalues are smeared by a near-degeneracy.
    std::vector<int> sector;
    bool sharp = true;
    for (const PauliString& s : syms) {
      const double ev = expectation(s, any.state).real();
      sector.push_back(ev >= 0.0 ? 1 : -1);
      sharp = sharp && std::abs(ev - (ev >= 0.0 ? 1.0 : -1.0)) < 1e-6;
    }
    if (sharp) {
      out.state = any.state;
    } else {
      LanczosOptions sector_opts = any_opts;
      sector_opts.warm_start = &any.state;
      GroundStateResult resolved = ground_state_impl(h, syms, &sector, sector_opts);
      out.converged = out.converged && resolved.converged;
      out.iterations += resolved.iterations;
      out.state = std::move(resolved.state);
    }
  }
  out.symmetric_state = std::move(sym.state);
  out.global_state = std::move(any.state);
  return out;
}

}  // namespace sptchain
