// Copyright 2026 The fellcp Authors
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

#include "fellcp/maps.hpp"

#include <cmath>
#include <limits>

#include "fellcp/random.hpp"

namespace fellcp {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw BundleError(BundleError::Kind::BundleMismatch, {}, what);
}

}  // namespace

BundleMap::BundleMap(
    BundlePtr source, BundlePtr target, GroupHom hom, std::vector<CMatrix> blocks)
    : source_(std::move(source)),
      target_(std::move(target)),
      hom_(std::move(hom)),
      blocks_(std::move(blocks)) {
  require(hom_.domain() == source_->group(), "hom domain is not the source group");
  require(hom_.codomain() == target_->group(), "hom codomain is not the target group");
  require(
      static_cast<int>(blocks_.size()) == source_->group().order(),
      "one block per source group element required");
  for (int g = 0; g < source_->group().order(); ++g) {
    const CMatrix& b = blocks_[g];
    require(
        b.rows() == target_->fiber_dim(hom_(g)) && b.cols() == source_->fiber_dim(g),
        "block " + std::to_string(g) + " has the wrong shape");
    require(all_finite(b), "block " + std::to_string(g) + " is not finite");
  }
}

BundleMap BundleMap::from_function(
    BundlePtr source, BundlePtr target, GroupHom hom, const FiberFunction& f,
    double tol) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < source->group().order(); ++g) {
    const Element hg = hom(g);
    CMatrix block(target->fiber_dim(hg), source->fiber_dim(g));
    for (int k = 0; k < source->fiber_dim(g); ++k) {
      block.col(k) = target->coords(hg, f(g, source->fiber(g).basis(k)), tol);
    }
    blocks.push_back(std::move(block));
  }
  return BundleMap(std::move(source), std::move(target), std::move(hom), std::move(blocks));
}

BundleMap BundleMap::zero(BundlePtr source, BundlePtr target, GroupHom hom) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < source->group().order(); ++g) {
    blocks.push_back(CMatrix::Zero(target->fiber_dim(hom(g)), source->fiber_dim(g)));
  }
  return BundleMap(std::move(source), std::move(target), std::move(hom), std::move(blocks));
}

BundleMap BundleMap::identity(BundlePtr bundle) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < bundle->group().order(); ++g) {
    blocks.push_back(CMatrix::Identity(bundle->fiber_dim(g), bundle->fiber_dim(g)));
  }
  GroupHom id = GroupHom::identity(bundle->group_ptr());
  return BundleMap(bundle, bundle, std::move(id), std::move(blocks));
}

CMatrix BundleMap::apply(Element g, const CMatrix& a) const {
  const CVector c = source_->coords(g, a);
  return target_->element(hom_(g), blocks_[g] * c);
}

CMatrix BundleMap::apply_basis(Element g, int k) const {
  return target_->element(hom_(g), blocks_[g].col(k));
}

std::vector<Element> BundleMap::support(double tol) const {
  std::vector<Element> supp;
  for (int g = 0; g < source_->group().order(); ++g) {
    bool nonzero = false;
    for (int k = 0; k < source_->fiber_dim(g) && !nonzero; ++k) {
      nonzero = apply_basis(g, k).norm() > tol;
    }
    if (nonzero) supp.push_back(g);
  }
  return supp;
}

BundleMap BundleMap::operator+(const BundleMap& other) const {
  require(
      same_bundle(*source_, *other.source_) && same_bundle(*target_, *other.target_) &&
          hom_.image() == other.hom_.image(),
      "cannot add bundle maps with different source, target or hom");
  std::vector<CMatrix> blocks = blocks_;
  for (std::size_t g = 0; g < blocks.size(); ++g) blocks[g] += other.blocks_[g];
  return BundleMap(source_, target_, hom_, std::move(blocks));
}

BundleMap BundleMap::operator*(Complex s) const {
  std::vector<CMatrix> blocks = blocks_;
  for (auto& b : blocks) b *= s;
  return BundleMap(source_, target_, hom_, std::move(blocks));
}

// ---------------------------------------------------------------------------

BundleMap adjoint_map(const BundleMap& t) {
  const FiniteGroup& G = t.source().group();
  return BundleMap::from_function(
      t.source_ptr(), t.target_ptr(), t.hom(),
      [&](Element g, const CMatrix& a) {
        return CMatrix(t.apply(G.inv(g), a.adjoint()).adjoint());
      });
}

double max_map_distance(const BundleMap& s, const BundleMap& t) {
  require(
      same_bundle(s.source(), t.source()) && same_bundle(s.target(), t.target()) &&
          s.hom().image() == t.hom().image(),
      "maps are not comparable");
  double worst = 0.0;
  for (int g = 0; g < s.source().group().order(); ++g) {
    for (int k = 0; k < s.source().fiber_dim(g); ++k) {
      worst = std::max(worst, op_norm(s.apply_basis(g, k) - t.apply_basis(g, k)));
    }
  }
  return worst;
}

MorphismReport is_morphism(const BundleMap& t, double tol) {
  MorphismReport report;
  const FellBundle& A = t.source();
  const FiniteGroup& G = A.group();
  for (int g = 0; g < G.order(); ++g) {
    for (int h = 0; h < G.order(); ++h) {
      for (int k = 0; k < A.fiber_dim(g); ++k) {
        for (int l = 0; l < A.fiber_dim(h); ++l) {
          const CMatrix lhs =
              t.apply(G.mul(g, h), A.fiber(g).basis(k) * A.fiber(h).basis(l));
          const CMatrix rhs = t.apply_basis(g, k) * t.apply_basis(h, l);
          const double defect = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
          report.max_defect = std::max(report.max_defect, defect);
          if (defect > tol && report.multiplicative) {
            report.multiplicative = false;
            report.witness = {g, h, k, l};
          }
        }
      }
    }
  }
  const BundleMap star = adjoint_map(t);
  for (int g = 0; g < G.order(); ++g) {
    for (int k = 0; k < A.fiber_dim(g); ++k) {
      const CMatrix lhs = star.apply_basis(g, k);
      const CMatrix rhs = t.apply_basis(g, k);
      const double defect = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
      report.max_defect = std::max(report.max_defect, defect);
      if (defect > tol && report.self_adjoint) {
        report.self_adjoint = false;
        if (report.multiplicative) report.witness = {g, k};
      }
    }
  }
  return report;
}

std::string to_string(PdVerdict v) {
  return v == PdVerdict::PositiveDefinite ? "PositiveDefinite" : "NotPositiveDefinite";
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<Element, int>> tagged_index(const FellBundle& b) {
  std::vector<std::pair<Element, int>> index;
  for (int g = 0; g < b.group().order(); ++g) {
    for (int k = 0; k < b.fiber_dim(g); ++k) index.emplace_back(g, k);
  }
  return index;
}

}  // namespace

CMatrix master_matrix(const BundleMap& t, double tol) {
  const FellBundle& A = t.source();
  const FiniteGroup& G = A.group();
  const auto index = tagged_index(A);
  const int n = static_cast<int>(index.size());

  GTuple tuple(n);
  for (int i = 0; i < n; ++i) tuple[i] = t.hom()(index[i].first);

  std::vector<std::vector<CMatrix>> blocks(n, std::vector<CMatrix>(n));
  for (int i = 0; i < n; ++i) {
    const auto [g, k] = index[i];
    const CMatrix ai_star = A.fiber(g).basis(k).adjoint();
    for (int j = 0; j < n; ++j) {
      const auto [h, l] = index[j];
      blocks[i][j] = t.apply(G.mul(G.inv(g), h), ai_star * A.fiber(h).basis(l));
    }
  }
  return matrix_algebra_embed(t.target(), tuple, blocks, tol);
}

PdReport pd_check_master(const BundleMap& t, double tol) {
  PdReport report;
  report.master_certificate = psd_check(master_matrix(t, tol), tol);
  report.verdict = report.master_certificate.positive()
                       ? PdVerdict::PositiveDefinite
                       : PdVerdict::NotPositiveDefinite;
  if (report.master_certificate.witness) {
    PdWitness w;
    w.index = tagged_index(t.source());
    for (const auto& [g, k] : w.index) w.tuple.push_back(t.hom()(g));
    w.vector = *report.master_certificate.witness;
    report.witness = std::move(w);
  }
  return report;
}

double pd_oracle(const BundleMap& t, int trials, int max_n, std::uint64_t seed) {
  const FellBundle& A = t.source();
  const FellBundle& B = t.target();
  const FiniteGroup& G = A.group();
  const int NB = B.ambient_dim();
  double worst = std::numeric_limits<double>::infinity();
  if (max_n < 1) max_n = 1;

  auto unit_element = [](Rng& rng, const FellBundle& bundle, Element g) {
    const int d = bundle.fiber_dim(g);
    if (d == 0) return CMatrix(CMatrix::Zero(bundle.ambient_dim(), bundle.ambient_dim()));
    CMatrix m = bundle.element(g, random_cvector(rng, d));
    const double nrm = m.norm();
    return nrm > 0 ? CMatrix(m / nrm) : m;
  };

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = keyed_rng(seed, static_cast<std::uint64_t>(trial));
    std::uniform_int_distribution<int> len(1, max_n);
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    const int n = len(rng);
    std::vector<Element> gs(n);
    std::vector<CMatrix> as(n), bs(n);
    for (int i = 0; i < n; ++i) {
      gs[i] = pick(rng);
      as[i] = unit_element(rng, A, gs[i]);
      bs[i] = unit_element(rng, B, t.hom()(gs[i]));
    }
    CMatrix sum = CMatrix::Zero(NB, NB);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Element g = G.mul(G.inv(gs[i]), gs[j]);
        if (A.fiber_dim(g) == 0) continue;
        sum += bs[i] * t.apply(g, as[i].adjoint() * as[j]) * bs[j].adjoint();
      }
    }
    const CMatrix herm = 0.5 * (sum + sum.adjoint());
    worst = std::min(worst, hermitian_eigen(herm).values(0));
  }
  return worst;
}

PdReport pd_check(const BundleMap& t, double tol, const OracleOptions& oracle) {
  PdReport report = pd_check_master(t, tol);
  report.oracle_trials = oracle.trials;
  report.oracle_min = pd_oracle(t, oracle.trials, oracle.max_n, oracle.seed);
  return report;
}

// ---------------------------------------------------------------------------

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, CMatrix superop)
    : source_(std::move(source)), target_(std::move(target)), superop_(std::move(superop)) {
  require(
      superop_.rows() == target_->dim() && superop_.cols() == source_->dim(),
      "superoperator has the wrong shape");
}

AlgebraElement AlgebraMap::apply(const AlgebraElement& x) const {
  return target_->element(superop_ * x.coords());
}

AlgebraMap induce(const BundleMap& t, AlgebraPtr source, AlgebraPtr target) {
  require(same_bundle(t.source(), source->bundle()), "source algebra does not match map");
  require(same_bundle(t.target(), target->bundle()), "target algebra does not match map");
  const FellBundle& A = t.source();
  const FellBundle& B = t.target();
  CMatrix superop = CMatrix::Zero(B.total_dim(), A.total_dim());
  for (int g = 0; g < A.group().order(); ++g) {
    const Element hg = t.hom()(g);
    superop.block(B.offset(hg), A.offset(g), B.fiber_dim(hg), A.fiber_dim(g)) =
        t.block(g);
  }
  return AlgebraMap(std::move(source), std::move(target), std::move(superop));
}

CMatrix cp_block_matrix(const AlgebraMap& m) {
  const CrossSectionalAlgebra& src = m.source();
  const CrossSectionalAlgebra& tgt = m.target();
  const int d = src.dim();
  const int big = tgt.big_dim();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(d) * big,
                              static_cast<Eigen::Index>(d) * big);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const CVector y = m.apply_coords(src.coords_of_star_product(i, j));
      out.block(static_cast<Eigen::Index>(i) * big, static_cast<Eigen::Index>(j) * big,
                big, big) = tgt.matrix_of(y);
    }
  }
  return out;
}

PsdCertificate cp_check(const AlgebraMap& m, double tol) {
  return psd_check(cp_block_matrix(m), tol);
}

MorphismReport is_star_homomorphism(const AlgebraMap& m, double tol) {
  MorphismReport report;
  const CrossSectionalAlgebra& src = m.source();
  const CrossSectionalAlgebra& tgt = m.target();
  std::vector<CMatrix> images;
  for (int i = 0; i < src.dim(); ++i) {
    images.push_back(tgt.matrix_of(m.superop().col(i)));
  }
  for (int i = 0; i < src.dim(); ++i) {
    for (int j = 0; j < src.dim(); ++j) {
      auto c = src.coords_of(src.basis(i) * src.basis(j));
      if (!c) throw NumericError("product left the source algebra");
      const CMatrix lhs = tgt.matrix_of(m.apply_coords(*c));
      const CMatrix rhs = images[i] * images[j];
      const double defect = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
      report.max_defect = std::max(report.max_defect, defect);
      if (defect > tol && report.multiplicative) {
        report.multiplicative = false;
        report.witness = {i, j};
      }
    }
    auto c = src.coords_of(src.basis(i).adjoint());
    if (!c) throw NumericError("adjoint left the source algebra");
    const CMatrix lhs = tgt.matrix_of(m.apply_coords(*c));
    const double defect =
        (lhs - images[i].adjoint()).norm() / std::max(1.0, images[i].norm());
    report.max_defect = std::max(report.max_defect, defect);
    if (defect > tol && report.self_adjoint) {
      report.self_adjoint = false;
      if (report.multiplicative) report.witness = {i};
    }
  }
  return report;
}

BundleMap extract_pd_from_cp(const AlgebraMap& m, const GroupHom& hom) {
  const BundlePtr& A = m.source().bundle_ptr();
  const BundlePtr& B = m.target().bundle_ptr();
  require(hom.domain() == A->group(), "hom domain is not the source group");
  require(hom.codomain() == B->group(), "hom codomain is not the target group");
  std::vector<CMatrix> blocks;
  for (int g = 0; g < A->group().order(); ++g) {
    const Element hg = hom(g);
    blocks.push_back(m.superop().block(
        B->offset(hg), A->offset(g), B->fiber_dim(hg), A->fiber_dim(g)));
  }
  return BundleMap(A, B, hom, std::move(blocks));
}

BundleMap compose_maps(const BundleMap& s, const BundleMap& t) {
  require(same_bundle(t.target(), s.source()), "target of T is not the source of S");
  GroupHom hom = s.hom().after(t.hom());
  std::vector<CMatrix> blocks;
  for (int g = 0; g < t.source().group().order(); ++g) {
    blocks.push_back(s.block(t.hom()(g)) * t.block(g));
  }
  return BundleMap(t.source_ptr(), s.target_ptr(), std::move(hom), std::move(blocks));
}

// ---------------------------------------------------------------------------

namespace {

struct TopSingular {
  double value;
  CVector left;
  CVector right;
};

TopSingular top_singular(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.singularValues()(0), svd.matrixU().col(0), svd.matrixV().col(0)};
}

CMatrix polar_part(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

FiberNorm fiber_map_norm(const BundleMap& t, Element g, std::uint64_t seed, int restarts) {
  const MatSubspace& af = t.source().fiber(g);
  const Element hg = t.hom()(g);
  const MatSubspace& bf = t.target().fiber(hg);
  const int d = af.dim();
  FiberNorm best{0.0, true};
  if (d == 0 || bf.dim() == 0) return best;
  const CMatrix& block = t.block(g);

  auto ratio = [&](const CVector& c) {
    const double denom = op_norm(af.combine(c));
    if (denom == 0.0) return 0.0;
    return op_norm(bf.combine(block * c)) / denom;
  };

  std::vector<CVector> starts;
  if (g == t.source().group().identity() && t.source().unit().norm() > 0) {
    starts.push_back(af.project(t.source().unit()));
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng = keyed_rng(seed, static_cast<std::uint64_t>(1000 * g + r));
    starts.push_back(random_cvector(rng, d));
  }

  const Eigen::LDLT<CMatrix> gram(af.gram());
  for (CVector c : starts) {
    double value = ratio(c);
    bool converged = false;
    for (int iter = 0; iter < 200 && !converged; ++iter) {
      const CMatrix a = af.combine(c) / op_norm(af.combine(c));
      const CMatrix y = bf.combine(block * (c / op_norm(af.combine(c))));
      if (y.norm() == 0.0) {
        converged = true;
        break;
      }
      const TopSingular top = top_singular(y);
      // functional c -> u^* T(a) v, as a row vector on coordinates
      CVector beta(bf.dim());
      for (int m = 0; m < bf.dim(); ++m) {
        beta(m) = top.left.dot(bf.basis(m) * top.right);
      }
      const CVector gamma = block.transpose() * beta;
      const CVector z = gram.solve(gamma.conjugate());
      const CVector proposal = af.project(polar_part(af.combine(z)));

      double step = 1.0;
      bool improved = false;
      const CVector base = af.project(a);
      while (step > 1e-6) {
        const CVector cand = base + step * (proposal - base);
        const double v = ratio(cand);
        if (v > value * (1.0 + 1e-14)) {
          converged = (v - value) <= 1e-13 * v;
          value = v;
          c = cand;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) converged = true;
    }
    if (value > best.lower_bound) {
      best.lower_bound = value;
      best.converged = converged;
    }
  }
  return best;
}

NormData norm_data(const BundleMap& t, double tol, std::uint64_t seed) {
  NormData data;
  const FellBundle& A = t.source();
  const Element e = A.group().identity();
  const bool pd = pd_check_master(t, tol).positive_definite();

  if (pd) {
    data.norm_Te = A.fiber_dim(e) == 0 ? 0.0 : op_norm(t.apply(e, A.unit()));
    data.norm_Te_exact = true;
  } else {
    data.norm_Te = fiber_map_norm(t, e, seed).lower_bound;
  }

  data.sup_converged = true;
  for (int g = 0; g < A.group().order(); ++g) {
    const FiberNorm fn = fiber_map_norm(t, g, seed);
    data.sup_norm_Tg = std::max(data.sup_norm_Tg, fn.lower_bound);
    data.sup_converged = data.sup_converged && fn.converged;
  }

  const AlgebraPtr src = build_algebra(t.source_ptr());
  const AlgebraPtr tgt = build_algebra(t.target_ptr());
  const AlgebraMap mt = induce(t, src, tgt);
  data.norm_MT_on_unit = algebra_norm(mt.apply(src->unit()));
  return data;
}

}  // namespace fellcp
