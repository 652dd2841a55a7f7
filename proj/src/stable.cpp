#include "quivemb/stable.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "quivemb/grassmannian.hpp"
#include "quivemb/subspace.hpp"

namespace quivemb {

ZSpace::ZSpace(Field f, std::size_t v, std::size_t w, std::vector<Matrix> b)
    : field(std::move(f)), v_dim(v), w_dim(w), basis(std::move(b)) {
  std::vector<Matrix> flat;
  for (const auto& m : basis) {
    if (!(m.field() == field)) throw std::invalid_argument("Z-space basis over another field");
    if (m.rows() != w_dim || m.cols() != v_dim) throw std::invalid_argument("Z-space basis map has the wrong shape");
    flat.push_back(flatten(m));
  }
  if (!flat.empty() && rank(Matrix::hstack(flat)) != flat.size())
    throw std::invalid_argument("Z-space basis is linearly dependent");
}

Matrix ZSpace::image_of(const Matrix& u) const {
  if (basis.empty() || u.cols() == 0) return Matrix(field, w_dim, 0);
  std::vector<Matrix> parts;
  for (const auto& f : basis) parts.push_back(f * u);
  return column_space_basis(Matrix::hstack(parts));
}

Representation kronecker_rep(const ZSpace& z) {
  return Representation(Quiver::kronecker(z.basis.size()), z.field,
                        DimVector{static_cast<long>(z.v_dim), static_cast<long>(z.w_dim)}, z.basis);
}

Verdict check_z_hypothesis(const ZSpace& z, std::uint64_t budget) {
  if (!z.field.is_finite()) throw std::invalid_argument("subspace enumeration needs a finite field");
  mpz_class total = 0;
  for (std::size_t k = 0; k <= z.v_dim; ++k) total += gaussian_binomial(static_cast<long>(z.v_dim), k, z.field.order());
  if (total > budget) throw std::length_error("subspace lattice of V exceeds the enumeration budget");

  Verdict out{"z-hypothesis", true, z.field.name(), {}, {}, {}, {}, {}};
  for (std::size_t k = 1; k <= z.v_dim; ++k) {
    long worst = std::numeric_limits<long>::max();
    for_each_subspace(z.field, z.v_dim, k, [&](const Matrix& u) {
      const long zu = static_cast<long>(z.image_of(u).cols());
      worst = std::min(worst, zu);
      if (zu < static_cast<long>(k) && out.holds) {
        out.holds = false;
        out.witness = SubspaceWitness{u, static_cast<long>(k), zu};
      }
      return true;
    });
    out.ledger.push_back(Inequality{"min dim Z(U) >= dim U  dim U=" + std::to_string(k), worst, ">=",
                                    static_cast<long>(k)});
  }

  // Second route: subrepresentations (U, U') of the K_k representation have
  // e(N) = dim U' - dim U at e = (k-1, 1).
  const long k = static_cast<long>(z.basis.size());
  if (k >= 1) {
    const SlopeResult s = min_slope(kronecker_rep(z), DimVector{k - 1, 1});
    if ((s.value >= 0) != out.holds)
      throw std::logic_error("Z-space hypothesis: subspace walk and K_k subrepresentations disagree");
    out.notes.push_back("confirmed via K_" + std::to_string(k) + " subrepresentations, min e(N) = " +
                        std::to_string(s.value));
  }
  return out;
}

namespace {

Matrix random_block(const ZSpace& z, std::size_t r, Rng& rng) {
  Matrix f(z.field, r * z.w_dim, r * z.v_dim);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Matrix blk(z.field, z.w_dim, z.v_dim);
      for (const auto& g : z.basis) blk.add_scaled(random_scalar(z.field, rng, kDefaultBox), g);
      f.set_block(a * z.w_dim, b * z.v_dim, blk);
    }
  return f;
}

bool block_injective(const Matrix& f) { return rank(f) == f.cols(); }

Morphism random_block_morphism(const Representation& n, const Representation& m, const HomBasis& hb, std::size_t r,
                               Rng& rng) {
  std::vector<Morphism> blocks;
  for (std::size_t k = 0; k < r * r; ++k) blocks.push_back(hb.random_element(rng));
  return block_morphism(n, r, m, r, blocks);
}

// Level-r trial index of the first success, or `trials` if none.
template <class Trial>
std::size_t first_success(std::size_t trials, bool parallel, Trial&& trial) {
  std::size_t best = trials;
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::size_t t = 0; t < trials; ++t) {
      if (t >= best) continue;
      if (trial(t)) best = t;
    }
  } else {
    for (std::size_t t = 0; t < trials && best == trials; ++t)
      if (trial(t)) best = t;
  }
  return best;
}

StableSearchReport block_search(const ZSpace& z, std::size_t r_max, std::size_t trials, std::uint64_t seed,
                                bool parallel) {
  StableSearchReport rep;
  rep.seed = seed;
  if (z.v_dim == 0) {
    rep.found = true;
    rep.r = 1;
    rep.block = Matrix(z.field, z.w_dim, 0);
    return rep;
  }
  for (std::size_t r = 1; r <= r_max; ++r) {
    const std::uint64_t level = derive_seed(seed, r);
    const std::size_t t = first_success(trials, parallel, [&](std::size_t i) {
      Rng rng(derive_seed(level, i));
      return block_injective(random_block(z, r, rng));
    });
    if (t < trials) {
      Rng rng(derive_seed(level, t));
      rep.found = true;
      rep.r = r;
      rep.block = random_block(z, r, rng);
      rep.trials_used += t + 1;
      return rep;
    }
    rep.trials_used += trials;
  }
  rep.reason = "no injective block matrix in " + std::to_string(trials) + " trials per r <= " + std::to_string(r_max) +
               " (inconclusive)";
  return rep;
}

StableSearchReport embedding_search(const Representation& n, const Representation& m, std::size_t r_max,
                                    std::size_t trials, std::uint64_t seed, bool parallel) {
  if (!(n.quiver() == m.quiver()) || !(n.field() == m.field()))
    throw std::invalid_argument("representations live on different quivers or fields");
  StableSearchReport rep;
  rep.seed = seed;
  const HomBasis hb = hom_basis(n, m);
  if (n.total_dim() == 0) {
    rep.found = true;
    rep.r = 1;
    rep.embedding = Morphism::zero(hb.source, hb.target);
    return rep;
  }
  if (hb.dim() == 0) {
    rep.reason = "Hom(N, M) = 0";
    return rep;
  }
  for (std::size_t r = 1; r <= r_max; ++r) {
    const std::uint64_t level = derive_seed(seed, r);
    const std::size_t t = first_success(trials, parallel, [&](std::size_t i) {
      Rng rng(derive_seed(level, i));
      return is_injective(random_block_morphism(n, m, hb, r, rng));
    });
    if (t < trials) {
      Rng rng(derive_seed(level, t));
      rep.found = true;
      rep.r = r;
      rep.embedding = random_block_morphism(n, m, hb, r, rng);
      rep.trials_used += t + 1;
      return rep;
    }
    rep.trials_used += trials;
  }
  rep.reason = "no injective morphism N^r -> M^r in " + std::to_string(trials) + " trials per r <= " +
               std::to_string(r_max) + " (inconclusive)";
  if (n.field().order() == 2) rep.reason += "; sampling over F_2 is weak";
  return rep;
}

long generic_hom_impl(const Representation& m, const DimVector& e, std::size_t r, std::size_t samples,
                      std::uint64_t seed, bool parallel) {
  const DimVector d = e * static_cast<long>(r);
  long best = std::numeric_limits<long>::max();
  auto trial = [&](std::size_t s) {
    const Representation x = random_representation(m.quiver(), d, m.field(), derive_seed(seed, s));
    return static_cast<long>(hom_dim(m, x));
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::size_t s = 0; s < samples; ++s) best = std::min(best, trial(s));
  } else {
    for (std::size_t s = 0; s < samples; ++s) best = std::min(best, trial(s));
  }
  return best;
}

GenericHomEstimate estimate(const Representation& m, const DimVector& e, std::size_t r, std::size_t samples,
                            std::uint64_t seed, bool parallel) {
  if (e.size() != m.quiver().vertex_count()) throw std::invalid_argument("dimension vector does not match quiver");
  if (samples == 0) throw std::invalid_argument("generic_hom needs at least one sample");
  return GenericHomEstimate{e, r, generic_hom_impl(m, e, r, samples, seed, parallel), samples};
}

}  // namespace

StableSearchReport find_injective_block(const ZSpace& z, std::size_t r_max, std::size_t trials, std::uint64_t seed) {
  return block_search(z, r_max, trials, seed, true);
}

StableSearchReport find_injective_block_serial(const ZSpace& z, std::size_t r_max, std::size_t trials,
                                               std::uint64_t seed) {
  return block_search(z, r_max, trials, seed, false);
}

StableSearchReport search_stable_embedding(const Representation& n, const Representation& m, std::size_t r_max,
                                           std::size_t trials, std::uint64_t seed) {
  return embedding_search(n, m, r_max, trials, seed, true);
}

StableSearchReport search_stable_embedding_serial(const Representation& n, const Representation& m,
                                                  std::size_t r_max, std::size_t trials, std::uint64_t seed) {
  return embedding_search(n, m, r_max, trials, seed, false);
}

std::optional<std::size_t> degenerate_vertex(const HomBasis& basis) {
  const Representation& n = *basis.source;
  const Representation& m = *basis.target;
  if (!n.field().is_rational()) throw std::invalid_argument("grid identity testing needs the rationals");
  const std::size_t h = basis.dim();
  for (std::size_t v = 0; v < n.quiver().vertex_count(); ++v) {
    const std::size_t nv = n.dim(v);
    if (nv == 0) continue;
    if (nv > m.dim(v) || h == 0) return v;
    // Maximal minors have degree <= nv in each coefficient.
    const std::size_t side = nv + 1;
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < h; ++k)
      if ((points *= side) > 10'000'000) throw std::length_error("determinant grid too large");
    std::vector<std::size_t> x(h, 0);
    bool injective_somewhere = false;
    while (!injective_somewhere) {
      Matrix f(n.field(), m.dim(v), nv);
      for (std::size_t k = 0; k < h; ++k)
        if (x[k]) f.add_scaled(Scalar::from_int(n.field(), static_cast<long long>(x[k])), basis.morphisms[k].at(v));
      injective_somewhere = rank(f) == nv;
      std::size_t k = 0;
      while (k < h && ++x[k] == side) x[k++] = 0;
      if (k == h) break;
    }
    if (!injective_somewhere) return v;
  }
  return std::nullopt;
}

GenericHomEstimate generic_hom(const Representation& m, const DimVector& e, std::size_t r, std::size_t samples,
                               std::uint64_t seed) {
  return estimate(m, e, r, samples, seed, true);
}

GenericHomEstimate generic_hom_serial(const Representation& m, const DimVector& e, std::size_t r,
                                      std::size_t samples, std::uint64_t seed) {
  return estimate(m, e, r, samples, seed, false);
}

GenericRank generic_rank_vector(const Representation& m, const DimVector& e, std::size_t samples,
                                std::uint64_t seed) {
  const std::size_t nv = m.quiver().vertex_count();
  if (e.size() != nv) throw std::invalid_argument("dimension vector does not match quiver");
  std::vector<long> end(samples), ranks(samples * nv, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t s = 0; s < samples; ++s) {
    const Representation x = random_representation(m.quiver(), e, m.field(), derive_seed(seed, s));
    end[s] = static_cast<long>(hom_dim(x, x));
    const HomBasis hb = hom_basis(m, x);
    if (hb.dim() == 0) continue;
    Rng rng(derive_seed(seed ^ 0x5bd1e995ULL, s));
    const auto rv = hb.random_element(rng).rank_vector();
    std::copy(rv.begin(), rv.end(), ranks.begin() + static_cast<long>(s * nv));
  }
  GenericRank out{DimVector::zero(nv), samples, 0};
  if (samples == 0) return out;
  const long least = *std::min_element(end.begin(), end.end());
  std::vector<long> best(nv, 0);
  for (std::size_t s = 0; s < samples; ++s) {
    if (end[s] != least) continue;
    ++out.generic_samples;
    for (std::size_t v = 0; v < nv; ++v) best[v] = std::max(best[v], ranks[s * nv + v]);
  }
  out.ranks = DimVector(best);
  return out;
}

StabilizationReport check_stabilization(const Representation& m, const DimVector& e, std::size_t r_min,
                                        std::size_t r_max, std::size_t samples, std::uint64_t seed,
                                        const IndecomposableTable* table) {
  if (r_min == 0 || r_min > r_max) throw std::invalid_argument("need 1 <= r_min <= r_max");
  StabilizationReport rep;
  rep.e = e;
  rep.e_of_m = functional(m.quiver(), e, m.dims());
  rep.samples = samples;
  if (m.field().is_finite() || table) {
    const SlopeResult s = min_slope(m, e, table);
    rep.min_slope = s.value;
    rep.hypothesis_verified = true;
    if (s.value < 0)
      throw std::domain_error("hypothesis e(N) >= 0 fails: N of dimension " + s.attained_by.dims.to_string() +
                              " has e(N) = " + std::to_string(s.value));
  }
  for (std::size_t r = r_min; r <= r_max; ++r) {
    const long est = generic_hom(m, e, r, samples, derive_seed(seed, r)).estimate;
    const long target = static_cast<long>(r) * rep.e_of_m;
    if (est < target)
      throw std::logic_error("generic Hom estimate " + std::to_string(est) + " below the Euler bound " +
                             std::to_string(target));
    rep.rows.push_back({r, est, target});
  }
  for (std::size_t k = rep.rows.size(); k-- > 0;) {
    if (rep.rows[k].estimate != rep.rows[k].target) break;
    rep.threshold = rep.rows[k].r;
  }
  return rep;
}

}  // namespace quivemb
