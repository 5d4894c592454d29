// Copyright 2026 The QQW Authors
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
// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Random inputs come from generators local to this file, and expected
// values from the literal tables or the oracles in oracle.hpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qqw/coin.hpp"
#include "qqw/path_sum.hpp"
#include "qqw/spectral.hpp"
#include "qqw/walk.hpp"

namespace {

using namespace qqw;
using oracle::Mat2;

const double kH = 1.0 / std::sqrt(2.0);
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

// Local generators, deliberately different from the library samplers.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Quaternion quaternion() {
    return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
  }
  Quaternion unit() {
    // Uniform on S^3 from two angles and a latitude.
    const double u = uniform(0, 1);
    const double t1 = uniform(0, 2 * std::numbers::pi);
    const double t2 = uniform(0, 2 * std::numbers::pi);
    const double r1 = std::sqrt(1 - u);
    const double r2 = std::sqrt(u);
    return {r1 * std::cos(t1), r1 * std::sin(t1), r2 * std::cos(t2), r2 * std::sin(t2)};
  }
  Quaternion unit_imaginary() {
    const double z = uniform(-1, 1);
    const double t = uniform(0, 2 * std::numbers::pi);
    const double r = std::sqrt(1 - z * z);
    return {0, r * std::cos(t), r * std::sin(t), z};
  }
  // Every 2x2 quaternion unitary is diag(u1,u2) R(theta) diag(u3,u4).
  Mat2 unitary() {
    const double t = uniform(0, std::numbers::pi / 2);
    const Mat2 left{unit(), 0.0, 0.0, unit()};
    const Mat2 rot{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    const Mat2 right{unit(), 0.0, 0.0, unit()};
    return oracle::mat_mul(oracle::mat_mul(left, rot), right);
  }
  Mat2 complex_unitary() {
    auto phase = [&] {
      const double a = uniform(0, 2 * std::numbers::pi);
      return Quaternion{std::cos(a), std::sin(a), 0, 0};
    };
    const double t = uniform(0, std::numbers::pi / 2);
    const Mat2 rot{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    return oracle::mat_mul(oracle::mat_mul(Mat2{phase(), 0.0, 0.0, phase()}, rot), Mat2{phase(), 0.0, 0.0, phase()});
  }
  Mat2 real_unitary() {
    const double t = uniform(0, 2 * std::numbers::pi);
    const double c = std::cos(t), s = std::sin(t);
    if (integer(0, 1) == 0) return {c, -s, s, c};
    return {c, s, s, -c};
  }
  Spinor unit_spinor() {
    const double x = uniform(0, std::numbers::pi / 2);
    return {std::cos(x) * unit(), std::sin(x) * unit()};
  }

 private:
  std::mt19937_64 rng_;
};

QMatrix2 to_q(const Mat2& m) { return {m[0], m[1], m[2], m[3]}; }
Mat2 to_o(const QMatrix2& m) { return {m.e11, m.e12, m.e21, m.e22}; }

double qdiff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.x0 - b.x0), std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

// Site is long on the supported platforms, so Distribution and the oracle's
// map are the same type.
double dist_diff(const Distribution& a, const std::map<long, double>& b) {
  double worst = 0.0;
  for (const auto& [x, p] : a) worst = std::max(worst, std::abs(p - (b.contains(x) ? b.at(x) : 0.0)));
  for (const auto& [x, p] : b) worst = std::max(worst, std::abs(p - (a.contains(x) ? a.at(x) : 0.0)));
  return worst;
}

double asymmetry(const Distribution& d) {
  double worst = 0.0;
  for (const auto& [x, p] : d) {
    const auto it = d.find(-x);
    worst = std::max(worst, std::abs(p - (it == d.end() ? 0.0 : it->second)));
  }
  return worst;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  const Outcome& outcome() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const QMatrix2 kExampleCoin = Quaternion(kH) * QMatrix2{1.0, I, J, K};
const Spinor kExamplePhi{kH, kH * J};

// 1. Golden distributions for the example coin.
void golden_distributions(Criterion& c) {
  const auto t0 = Clock::now();
  const CoinOperator coin = CoinOperator::make(kExampleCoin);
  const Distribution want3{{-3, 1.0 / 8}, {-1, 3.0 / 8}, {1, 3.0 / 8}, {3, 1.0 / 8}};
  const Distribution want4{{-4, 1.0 / 16}, {-2, 6.0 / 16}, {0, 2.0 / 16}, {2, 6.0 / 16}, {4, 1.0 / 16}};
  const double e3 = dist_diff(distribution(coin, kExamplePhi, 3), want3);
  const double e4 = dist_diff(distribution(coin, kExamplePhi, 4), want4);
  const double o3 = dist_diff(want3, oracle::dense_walk_distribution(to_o(kExampleCoin), kExamplePhi.left, kExamplePhi.right, 3));
  const double o4 = dist_diff(want4, oracle::dense_walk_distribution(to_o(kExampleCoin), kExamplePhi.left, kExamplePhi.right, 4));
  const double dt = seconds_since(t0);
  const double worst = std::max({e3, e4, o3, o4});
  c.require(worst <= 1e-12, "max deviation " + fmt("%.3g", worst));
  c.require(dt < 1.0, "runtime " + fmt("%.3f s", dt));
  c.note("max deviation " + fmt("%.2g", worst) + ", " + fmt("%.4f s", dt));
}

// 2. Xi_3 and Xi_4 tables for the example coin, both evaluation routes.
void golden_xi_tables(Criterion& c) {
  const CoinOperator coin = CoinOperator::make(kExampleCoin);
  const double s3 = 1.0 / (2.0 * std::sqrt(2.0));
  struct Row {
    int n, l;
    double scale;
    QMatrix2 m;
  };
  const std::vector<Row> rows{
      {3, 3, s3, {1.0, I, 0.0, 0.0}},   {3, 2, s3, {2.0 * K, 0.0, J, -K}},
      {3, 1, s3, {1.0, -I, 0.0, 2.0}},  {3, 0, s3, {0.0, 0.0, -J, -K}},
      {4, 4, 0.25, {1.0, I, 0.0, 0.0}}, {4, 3, 0.25, {3.0 * K, J, J, -K}},
      {4, 2, 0.25, {1.0, I, I, 1.0}},   {4, 1, 0.25, {-K, J, J, 3.0 * K}},
      {4, 0, 0.25, {0.0, 0.0, I, 1.0}},
  };
  double worst = 0.0;
  for (const Row& r : rows) {
    const Mat2 want = to_o(Quaternion(r.scale) * r.m);
    worst = std::max(worst, oracle::max_diff(to_o(xi_bruteforce(coin, r.n, r.l, r.n - r.l)), want));
    worst = std::max(worst, oracle::max_diff(to_o(xi_reduced(coin, r.n, r.l, r.n - r.l)), want));
  }
  c.require(worst <= 1e-12, "max entry deviation " + fmt("%.3g", worst));
  c.note(std::to_string(rows.size()) + " matrices x 2 routes, max deviation " + fmt("%.2g", worst));
}

// 3. Product table and the Xi_4(3,1) decomposition.
void pqrs_algebra(Criterion& c) {
  const auto t0 = Clock::now();
  Gen gen(3);
  std::vector<Mat2> coins{to_o(*coin_preset("hadamard")), to_o(kExampleCoin)};
  for (int t = 0; t < 50; ++t) coins.push_back(gen.unitary());
  double table = 0.0;
  double decomp = 0.0;
  for (const Mat2& m : coins) {
    const CoinOperator coin = CoinOperator::make(to_q(m));
    const Quaternion a = m[0], b = m[1], cc = m[2], d = m[3];
    const Quaternion z{};
    const std::array<Mat2, 4> basis{Mat2{a, b, z, z}, Mat2{z, z, cc, d}, Mat2{cc, d, z, z}, Mat2{z, z, a, b}};
    for (const ProductTableEntry& e : product_table(coin, 1e-10)) {
      const Mat2 direct = oracle::mat_mul(basis[static_cast<std::size_t>(e.lhs)], basis[static_cast<std::size_t>(e.rhs)]);
      Mat2 term = basis[static_cast<std::size_t>(e.term.basis)];
      for (Quaternion& q : term) q = oracle::mul(e.term.coefficient, q);
      table = std::max(table, oracle::max_diff(direct, term));
    }
    const PQRSDecomposition dec = decompose_pqrs(coin, to_q(oracle::path_sum(m, 4, 3)));
    using oracle::mul;
    decomp = std::max({decomp, qdiff(dec.p, oracle::add(mul(mul(a, b), cc), mul(mul(b, cc), a))), qdiff(dec.q, z),
                       qdiff(dec.r, mul(mul(a, a), b)), qdiff(dec.s, mul(mul(cc, a), a))});
  }
  double complex_case = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Mat2 m = gen.complex_unitary();
    const PQRSDecomposition dec = decompose_pqrs(CoinOperator::make(to_q(m)), to_q(oracle::path_sum(m, 4, 3)));
    using oracle::mul;
    complex_case = std::max({complex_case, qdiff(dec.p, 2.0 * mul(mul(m[0], m[1]), m[2])), qdiff(dec.q, 0.0),
                             qdiff(dec.r, mul(mul(m[0], m[0]), m[1])), qdiff(dec.s, mul(mul(m[0], m[0]), m[2]))});
  }
  const double dt = seconds_since(t0);
  c.require(table <= 1e-10, "product table deviation " + fmt("%.3g", table));
  c.require(decomp <= 1e-10, "Xi_4(3,1) coefficient deviation " + fmt("%.3g", decomp));
  c.require(complex_case <= 1e-10, "complex coefficient deviation " + fmt("%.3g", complex_case));
  c.require(dt < 5.0, "runtime " + fmt("%.3f s", dt));
  c.note("52 coins, table " + fmt("%.2g", table) + ", p/q/r/s " + fmt("%.2g", std::max(decomp, complex_case)) + ", " +
         fmt("%.3f s", dt));
}

// 4. Quaternion algebra.
void quaternion_laws(Criterion& c) {
  Gen gen(4);
  double sq = 0.0, assoc = 0.0, anti = 0.0, normrel = 0.0, prod = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Quaternion x = gen.quaternion(), y = gen.quaternion(), z = gen.quaternion();
    const Quaternion closed{x.x0 * x.x0 - x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3, 2 * x.x0 * x.x1, 2 * x.x0 * x.x2,
                            2 * x.x0 * x.x3};
    sq = std::max({sq, qdiff(x * x, closed), qdiff(square(x), closed)});
    assoc = std::max(assoc, qdiff((x * y) * z, x * (y * z)));
    anti = std::max(anti, qdiff(conj(x * y), conj(y) * conj(x)));
    normrel = std::max(normrel, std::abs(norm(x * y) - norm(x) * norm(y)) / (norm(x) * norm(y)));
    prod = std::max(prod, qdiff(x * y, oracle::mul(x, y)));
  }
  c.require(sq <= 1e-12, "square closed form " + fmt("%.3g", sq));
  c.require(assoc <= 1e-12, "associativity " + fmt("%.3g", assoc));
  c.require(anti <= 1e-12, "conjugate of product " + fmt("%.3g", anti));
  c.require(normrel <= 1e-10, "norm multiplicativity " + fmt("%.3g", normrel));
  c.require(prod <= 1e-12, "product vs matrix oracle " + fmt("%.3g", prod));
  c.note("10^4 samples, worst " + fmt("%.2g", std::max({sq, assoc, anti, prod})) + " abs, " + fmt("%.2g", normrel) + " rel");
}

// 5. Constant periodic states have invariant measures.
void uniform_stationarity(Criterion& c) {
  const auto t0 = Clock::now();
  Gen gen(5);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Mat2 m = gen.unitary();
    const CoinOperator coin = CoinOperator::make(to_q(m));
    Quaternion l = gen.quaternion(), r = gen.quaternion();
    const double mass = oracle::abs2(l) + oracle::abs2(r);
    WalkState state = WalkState::constant({l, r});
    for (int n = 1; n <= 50; ++n) {
      state = evolve_step(state, coin);
      // Oracle: a constant field stays constant, phi -> U phi.
      const Quaternion nl = oracle::add(oracle::mul(m[0], l), oracle::mul(m[1], r));
      const Quaternion nr = oracle::add(oracle::mul(m[2], l), oracle::mul(m[3], r));
      l = nl;
      r = nr;
      const Measure mu = measure_of(state);
      for (Site x = -3; x <= 3; ++x) worst = std::max(worst, std::abs(mu.at(x) - mass));
      worst = std::max(worst, std::abs(oracle::abs2(l) + oracle::abs2(r) - mass));
      worst = std::max({worst, qdiff(state.at(n).left, l), qdiff(state.at(n).right, r)});
    }
  }
  const double dt = seconds_since(t0);
  c.require(worst <= 1e-10, "measure deviation " + fmt("%.3g", worst));
  c.require(dt < 5.0, "runtime " + fmt("%.3f s", dt));
  c.note("50 coins x 50 steps, deviation " + fmt("%.2g", worst) + ", " + fmt("%.3f s", dt));
}

// Independent residual of U^(s) Psi = Psi lambda over one period.
double eigen_residual(const Mat2& u, const WalkState& s, const Quaternion& lambda) {
  double worst = 0.0;
  for (Site x = 0; x < s.size(); ++x) {
    const Spinor here = s.at(x), east = s.at(x + 1), west = s.at(x - 1);
    const Quaternion l = oracle::add(oracle::mul(u[0], east.left), oracle::mul(u[1], east.right));
    const Quaternion r = oracle::add(oracle::mul(u[2], west.left), oracle::mul(u[3], west.right));
    worst = std::max({worst, qdiff(l, oracle::mul(here.left, lambda)), qdiff(r, oracle::mul(here.right, lambda))});
  }
  return worst;
}

// 6. Eigenstates of the a = 0 coins.
void a0_witness(Criterion& c) {
  Gen gen(6);
  const Mat2 flip{0.0, 1.0, 1.0, 0.0};
  const Mat2 flipneg{0.0, 1.0, -1.0, 0.0};
  double residual = 0.0;
  int other = 0;
  int trials = 0;
  bool stationary = true;
  for (int t = 0; t < 40; ++t) {
    std::vector<EvenSitePair> pairs;
    const int k = gen.integer(2, 4);
    for (int i = 0; i < k; ++i) {
      // Distinct moduli per pair.
      pairs.push_back({(1.0 + i) * gen.unit(), (0.5 + 0.7 * i) * gen.unit()});
    }
    const bool use_flip = t % 2 == 0;
    const Mat2 u = use_flip ? flip : flipneg;
    const CoinOperator coin = CoinOperator::make(to_q(u));
    const EigenCandidate cand = use_flip ? build_eigenstate_flip(t % 4 == 0 ? 1 : -1, pairs)
                                         : build_eigenstate_flipneg(gen.unit_imaginary(), pairs);
    const CheckResult lib = right_eigen_check(coin, cand, 1e-12);
    residual = std::max({residual, lib.max_residual, eigen_residual(u, cand.state, cand.lambda)});
    stationary = stationary && lib.pass && verify_stationary(coin, cand.state, 20, 1e-10).pass;
    const MeasureClass cls = classify_measure(measure_of(cand.state), 8);
    ++trials;
    other += cls.tag == MeasureClass::Tag::Other ? 1 : 0;
  }
  c.require(residual <= 1e-12, "eigen residual " + fmt("%.3g", residual));
  c.require(stationary, "an eigenstate measure moved within 20 steps");
  c.require(other == trials, std::to_string(trials - other) + " measures not classified Other");
  c.note(std::to_string(trials) + " eigenstates, residual " + fmt("%.2g", residual) + ", all stationary and Other");
}

// 7. Complexification preserves distributions for real coins; A/B/C formula.
void complexification(Criterion& c) {
  Gen gen(7);
  double worst = 0.0;
  double abc = 0.0;
  double kmax = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Mat2 m = gen.real_unitary();
    const CoinOperator coin = CoinOperator::make(to_q(m));
    for (int s = 0; s < 100; ++s) {
      const Spinor phi = gen.unit_spinor();
      const Complexification cx = complexify_initial_state(PolarInitialState::from_spinor(phi));
      kmax = std::max(kmax, std::abs(cx.k_value));
      const auto lib_orig = distribution_series(coin, phi, 10);
      for (int n = 0; n <= 10; ++n) {
        const auto o = oracle::dense_walk_distribution(m, phi.left, phi.right, n);
        const auto oc = oracle::dense_walk_distribution(m, cx.state.left, cx.state.right, n);
        worst = std::max({worst, dist_diff(lib_orig[static_cast<std::size_t>(n)], oc),
                          dist_diff(Distribution(o.begin(), o.end()), oc)});
      }
      if (s < 10) {
        for (int n = 1; n <= 10; ++n) {
          const auto o = oracle::dense_walk_distribution(m, phi.left, phi.right, n);
          for (int l = 0; l <= n; ++l) {
            const long x = n - 2 * l;
            const double p = abc_coefficients(coin, n, l, n - l).probability(phi);
            abc = std::max(abc, std::abs(p - (o.contains(x) ? o.at(x) : 0.0)));
          }
        }
      }
    }
  }
  c.require(worst <= 1e-12, "distribution deviation " + fmt("%.3g", worst));
  c.require(kmax <= 1.0 + 1e-12, "|K| = " + fmt("%.17g", kmax));
  c.require(abc <= 1e-10, "A/B/C deviation " + fmt("%.3g", abc));
  c.note("20 coins x 100 states, n <= 10: " + fmt("%.2g", worst) + ", A/B/C " + fmt("%.2g", abc));
}

// alpha = sqrt(w) u, beta with Re(alpha conj(beta)) = re and |beta|^2 = 1 - w.
Spinor constrained(Gen& gen, double w, double re) {
  const Quaternion u = gen.unit();
  const double a = std::sqrt(w);
  const double along = re / a;
  const double rest = std::sqrt(1.0 - w - along * along);
  return {a * u, along * u + rest * oracle::mul(gen.unit_imaginary(), u)};
}

// 8. Hadamard symmetry under the real-part and modulus constraints.
void hadamard_symmetry(Criterion& c) {
  Gen gen(8);
  const CoinOperator h = CoinOperator::make(*coin_preset("hadamard"));
  const Distribution one{{-1, 0.5}, {1, 0.5}};
  const Distribution two{{-2, 0.25}, {0, 0.5}, {2, 0.25}};
  const Distribution three{{-3, 0.125}, {-1, 0.375}, {1, 0.375}, {3, 0.125}};
  double exact = 0.0;
  double margin = 1e9;
  for (int t = 0; t < 200; ++t) {
    const double w = gen.uniform(0.15, 0.85);
    const Spinor s = constrained(gen, w, 0.0);
    exact = std::max({exact, dist_diff(distribution(h, s, 1), one), dist_diff(distribution(h, s, 2), two)});
    const Spinor s3 = constrained(gen, 0.5, 0.0);
    exact = std::max(exact, dist_diff(distribution(h, s3, 3), three));
    // Perturb Re(alpha conj(beta)) by 0.05.
    const Spinor p1 = constrained(gen, w, 0.05);
    margin = std::min({margin, asymmetry(distribution(h, p1, 1)), asymmetry(distribution(h, p1, 2))});
    const Spinor p3 = constrained(gen, 0.5, 0.05);
    margin = std::min(margin, asymmetry(distribution(h, p3, 3)));
    // Perturb |alpha| = 1/sqrt2 by 0.05.
    const double am = kH + (t % 2 == 0 ? 0.05 : -0.05);
    margin = std::min(margin, asymmetry(distribution(h, constrained(gen, am * am, 0.0), 3)));
  }
  c.require(exact <= 1e-12, "constrained profile deviation " + fmt("%.3g", exact));
  c.require(margin > 1e-3, "perturbed asymmetry only " + fmt("%.3g", margin));
  c.note("200 samples, deviation " + fmt("%.2g", exact) + ", smallest perturbed asymmetry " + fmt("%.3g", margin));
}

// Independent evolution of a periodic state.
std::vector<double> periodic_measure_after(const Mat2& u, std::vector<Spinor> amps, int steps) {
  const std::size_t p = amps.size();
  for (int k = 0; k < steps; ++k) {
    std::vector<Spinor> next(p);
    for (std::size_t x = 0; x < p; ++x) {
      const Spinor& e = amps[(x + 1) % p];
      const Spinor& w = amps[(x + p - 1) % p];
      next[x] = {oracle::add(oracle::mul(u[0], e.left), oracle::mul(u[1], e.right)),
                 oracle::add(oracle::mul(u[2], w.left), oracle::mul(u[3], w.right))};
    }
    amps = std::move(next);
  }
  std::vector<double> mu(p);
  for (std::size_t x = 0; x < p; ++x) mu[x] = oracle::abs2(amps[x].left) + oracle::abs2(amps[x].right);
  return mu;
}

// 9. b = 0: two-step invariance never occurs without uniformity.
void b0_falsification(Criterion& c) {
  Gen gen(9);
  int premise = 0;
  int falsified = 0;
  int disagreements = 0;
  const double tol = 1e-9;
  for (int t = 0; t < 1000; ++t) {
    const Mat2 u{gen.unit(), 0.0, 0.0, gen.unit()};
    const int p = gen.integer(1, 8);
    std::vector<Spinor> amps;
    const int family = t % 4;
    const double level = gen.uniform(0.5, 1.5);
    const double h0 = gen.uniform(0.1, 0.4), h1 = gen.uniform(0.1, 0.4);
    for (int x = 0; x < p; ++x) {
      switch (family) {
        case 0:  // unrelated amplitudes
          amps.push_back({gen.quaternion(), gen.quaternion()});
          break;
        case 1:  // constant moduli, random phases
          amps.push_back({std::sqrt(h0) * gen.unit(), std::sqrt(h1) * gen.unit()});
          break;
        case 2: {  // |L|^2 = h(x) with period 2, |R|^2 = level - h(x)
          const double hx = x % 2 == 0 ? h0 : h1;
          amps.push_back({std::sqrt(hx) * gen.unit(), std::sqrt(level - hx) * gen.unit()});
          break;
        }
        default:  // same as 2 but with a non-complementary right part
          amps.push_back({std::sqrt(x % 2 == 0 ? h0 : h1) * gen.unit(), std::sqrt(level) * gen.unit()});
          break;
      }
    }
    const TwoStepReport rep = check_two_step_uniformity(CoinOperator::make(to_q(u)), WalkState::periodic(amps), tol);
    const auto mu0 = periodic_measure_after(u, amps, 0);
    const auto mu1 = periodic_measure_after(u, amps, 1);
    const auto mu2 = periodic_measure_after(u, amps, 2);
    bool inv = true;
    for (std::size_t x = 0; x < mu0.size(); ++x) {
      inv = inv && std::abs(mu1[x] - mu0[x]) <= tol && std::abs(mu2[x] - mu0[x]) <= tol;
    }
    const auto [lo, hi] = std::minmax_element(mu0.begin(), mu0.end());
    const bool uni = *hi - *lo <= tol;
    premise += inv ? 1 : 0;
    falsified += (inv && !uni) ? 1 : 0;
    disagreements += (inv != rep.two_step_invariant || uni != rep.uniform) ? 1 : 0;
    falsified += rep.implication_holds() ? 0 : 1;
  }
  c.require(falsified == 0, std::to_string(falsified) + " counterexamples");
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements with the oracle");
  c.require(premise >= 100, "premise met only " + std::to_string(premise) + " times");
  c.note("1000 states, premise met " + std::to_string(premise) + " times, no counterexample");
}

// 10. Reduced vs brute force Xi, and Xi phi vs the walk.
void oracle_equivalence(Criterion& c) {
  Gen gen(10);
  double xi = 0.0;
  double walk = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Mat2 m = gen.unitary();
    const CoinOperator coin = CoinOperator::make(to_q(m));
    const Spinor phi = gen.unit_spinor();
    WalkState state = WalkState::delta(phi);
    for (int n = 0; n <= 8; ++n) {
      for (int l = 0; l <= n; ++l) {
        const QMatrix2 red = xi_reduced(coin, n, l, n - l);
        xi = std::max({xi, oracle::max_diff(to_o(red), to_o(xi_bruteforce(coin, n, l, n - l))),
                       oracle::max_diff(to_o(red), oracle::path_sum(m, n, l))});
        const Spinor got = red * phi;
        const Spinor want = state.at(n - 2 * l);
        walk = std::max({walk, qdiff(got.left, want.left), qdiff(got.right, want.right)});
      }
      state = evolve_step(state, coin);
    }
  }
  c.require(xi <= 1e-10, "reduced vs brute force " + fmt("%.3g", xi));
  c.require(walk <= 1e-10, "Xi phi vs walk " + fmt("%.3g", walk));
  c.note("20 coins, n <= 8: Xi " + fmt("%.2g", xi) + ", walk " + fmt("%.2g", walk));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"golden distributions", golden_distributions},
      {"golden Xi tables", golden_xi_tables},
      {"PQRS algebra", pqrs_algebra},
      {"quaternion algebra", quaternion_laws},
      {"uniform stationarity", uniform_stationarity},
      {"a = 0 eigenstate witness", a0_witness},
      {"complexification", complexification},
      {"Hadamard symmetry", hadamard_symmetry},
      {"b = 0 two-step falsification", b0_falsification},
      {"oracle equivalence", oracle_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const Outcome& o = c.outcome();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
