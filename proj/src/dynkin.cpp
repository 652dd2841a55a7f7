#include "quivemb/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quivemb/search.hpp"

namespace quivemb {

namespace {

long root_coordinate_bound(const Quiver& q) {
  auto comps = q.dynkin_components();
  if (!comps) throw std::invalid_argument("quiver " + q.dynkin_name() + " is not of Dynkin type");
  long bound = 0;
  for (const auto& c : *comps) {
    long b = 1;
    if (c.family == 'D') b = 2;
    if (c.family == 'E') b = c.rank == 6 ? 3 : c.rank == 7 ? 4 : 6;
    bound = std::max(bound, b);
  }
  return bound;
}

std::uint64_t root_seed(std::uint64_t seed, const DimVector& root) {
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < root.size(); ++i) h = derive_seed(h, static_cast<std::uint64_t>(root[i]) + 31 * i);
  return h;
}

void require_table_input(const Representation& x, const IndecomposableTable& table) {
  if (!(x.quiver() == table.quiver)) throw std::invalid_argument("representation is not on the table's quiver");
  if (!(x.field() == table.field))
    throw std::invalid_argument("representation over " + x.field().name() + " but table over " + table.field.name());
}

}  // namespace

std::vector<DimVector> positive_roots(const Quiver& q) {
  const long bound = root_coordinate_bound(q);
  const std::size_t n = q.vertex_count();
  std::vector<DimVector> roots;
  if (n == 0) return roots;
  // Odometer over [0, bound]^n; the Tits form is evaluated inline.
  std::vector<long> d(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && d[k] == bound) d[k++] = 0;
    if (k == n) break;
    ++d[k];
    long tits = 0;
    for (long c : d) tits += c * c;
    for (const auto& a : q.arrows()) tits -= d[a.source] * d[a.target];
    if (tits == 1) roots.emplace_back(d);
  }
  std::sort(roots.begin(), roots.end());
  std::stable_sort(roots.begin(), roots.end(),
                   [](const DimVector& a, const DimVector& b) { return a.total() < b.total(); });
  return roots;
}

Representation indecomposable(const Quiver& q, const DimVector& root, const Field& field,
                              const SamplingConfig& config) {
  root_coordinate_bound(q);
  if (root.size() != q.vertex_count() || root.is_zero() || euler_form(q, root, root) != 1)
    throw std::invalid_argument(root.to_string() + " is not a positive root of " + q.dynkin_name());
  const bool via_rationals = field.is_finite() && field.order() < 5;
  const Field sample_field = via_rationals ? Field::rationals() : field;
  const std::uint64_t base = root_seed(config.seed, root);
  for (std::size_t attempt = 0; attempt < config.retries; ++attempt) {
    const long box = 1L << std::min<std::size_t>(attempt / 8, 10);
    Representation x = random_representation(q, root, sample_field, derive_seed(base, attempt), box);
    if (via_rationals) x = x.reduced_to(field);
    if (hom_dim(x, x) == 1 && ext_dim(x, x) == 0) return x;
  }
  throw std::runtime_error("no indecomposable of dimension " + root.to_string() + " certified after " +
                           std::to_string(config.retries) + " samples");
}

IndecomposableTable IndecomposableTable::build(const Quiver& q, const Field& field, const SamplingConfig& config) {
  std::vector<Representation> reps;
  for (const auto& r : positive_roots(q)) reps.push_back(indecomposable(q, r, field, config));
  return from_reps(q, field, std::move(reps));
}

IndecomposableTable IndecomposableTable::from_reps(const Quiver& q, const Field& field,
                                                   std::vector<Representation> reps) {
  IndecomposableTable t{q, field, {}, std::move(reps), {}, {}, {}, Matrix()};
  for (const auto& r : t.reps) {
    if (!(r.quiver() == q) || !(r.field() == field)) throw std::invalid_argument("table rep on another quiver or field");
    t.roots.push_back(r.dims());
  }
  if (t.roots != positive_roots(q)) throw std::invalid_argument("table reps do not match the positive roots");
  const std::size_t n = t.size();
  t.hom.assign(n, std::vector<long>(n, 0));
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) t.hom[u][v] = static_cast<long>(hom_dim(t.reps[u], t.reps[v]));

  for (std::size_t u = 0; u < n; ++u) {
    bool proj = false, inj = false;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      proj = proj || build_projective(q, field, i).dims() == t.roots[u];
      inj = inj || build_injective(q, field, i).dims() == t.roots[u];
    }
    t.projective.push_back(proj);
    t.injective.push_back(inj);
  }

  const Field Q = Field::rationals();
  Matrix h(Q, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) h.set_int(u, v, t.hom[u][v]);
  auto inv = inverse(h);
  if (!inv) throw std::runtime_error("Hom matrix of the indecomposables is singular");
  t.hom_inverse = std::move(*inv);
  for (std::size_t u = 0; u < n; ++u)
    if (t.hom[u][u] != 1 || t.ext(u, u) != 0) throw std::runtime_error("table rep is not a rigid brick");
  return t;
}

std::optional<std::size_t> IndecomposableTable::index_of(const DimVector& root) const {
  auto it = std::find(roots.begin(), roots.end(), root);
  if (it == roots.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

long IndecomposableTable::ext(std::size_t u, std::size_t v) const {
  return hom[u][v] - euler_form(quiver, roots[u], roots[v]);
}

void IndecomposableTable::validate() const {
  if (roots != positive_roots(quiver)) throw std::runtime_error("table roots are not the positive roots");
  for (std::size_t u = 0; u < size(); ++u) {
    if (!(reps[u].dims() == roots[u])) throw std::runtime_error("table rep has the wrong dimension vector");
    if (hom[u][u] != 1 || ext(u, u) != 0) throw std::runtime_error("table rep is not a rigid brick");
    for (std::size_t v = 0; v < size(); ++v)
      if (hom[u][v] != static_cast<long>(hom_dim(reps[u], reps[v])))
        throw std::runtime_error("table Hom matrix is inconsistent");
  }
  Matrix h(Field::rationals(), size(), size());
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = 0; v < size(); ++v) h.set_int(u, v, hom[u][v]);
  if (!(h * hom_inverse == Matrix::identity(Field::rationals(), size())))
    throw std::runtime_error("table Hom inverse is wrong");
}

std::vector<long> decompose(const Representation& x, const IndecomposableTable& table) {
  require_table_input(x, table);
  const std::size_t n = table.size();
  std::vector<long> h(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t u = 0; u < n; ++u) h[u] = static_cast<long>(hom_dim(table.reps[u], x));
  const Field Q = Field::rationals();
  Matrix hv(Q, n, 1);
  for (std::size_t u = 0; u < n; ++u) hv.set_int(u, 0, h[u]);
  const Matrix m = table.hom_inverse * hv;
  std::vector<long> mult(n);
  DimVector total = DimVector::zero(x.quiver().vertex_count());
  for (std::size_t u = 0; u < n; ++u) {
    const mpq_class& c = m.rationals()[u];
    if (c.get_den() != 1 || c < 0)
      throw std::runtime_error("Hom vector does not decompose: multiplicity " + m.at(u, 0).to_string() + " at root " +
                               table.roots[u].to_string());
    mult[u] = c.get_num().get_si();
    total = total + table.roots[u] * mult[u];
  }
  if (!(total == x.dims())) throw std::runtime_error("decomposition does not add up to the dimension vector");
  return mult;
}

Representation assemble(const IndecomposableTable& table, const std::vector<long>& multiplicities) {
  std::vector<Representation> parts;
  for (std::size_t u = 0; u < table.size(); ++u)
    for (long k = 0; k < multiplicities.at(u); ++k) parts.push_back(table.reps[u]);
  if (parts.empty()) return Representation::zero(table.quiver, table.field);
  return direct_sum(parts);
}

Morphism decomposition_isomorphism(const Representation& x, const IndecomposableTable& table,
                                   const std::vector<long>& multiplicities) {
  require_table_input(x, table);
  const auto sum = std::make_shared<const Representation>(assemble(table, multiplicities));
  if (!(sum->dims() == x.dims())) throw std::invalid_argument("multiplicities do not match the dimension vector");
  const std::size_t nv = x.quiver().vertex_count();

  // Summand copies in block order; processed largest first.
  std::vector<std::size_t> copies;
  for (std::size_t u = 0; u < table.size(); ++u)
    for (long k = 0; k < multiplicities[u]; ++k) copies.push_back(u);
  std::vector<std::size_t> order(copies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return table.roots[copies[a]].total() > table.roots[copies[b]].total();
  });

  std::vector<HomBasis> bases;
  for (std::size_t u = 0; u < table.size(); ++u) bases.push_back(hom_basis(table.reps[u], x));

  auto extends = [&](const std::vector<Matrix>& acc, const Morphism& f) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (f.at(v).cols() == 0) continue;
      const Matrix parts[] = {acc[v], f.at(v)};
      if (rank(Matrix::hstack(parts)) != acc[v].cols() + f.at(v).cols()) return false;
    }
    return true;
  };

  for (std::uint64_t round = 0; round < 8; ++round) {
    std::vector<std::optional<Morphism>> chosen(copies.size());
    std::vector<Matrix> acc;
    for (std::size_t v = 0; v < nv; ++v) acc.emplace_back(x.field(), x.dim(v), 0);
    Rng rng(derive_seed(round, 0x51ab));
    bool ok = true;
    for (std::size_t c : order) {
      const HomBasis& hb = bases[copies[c]];
      std::optional<Morphism> pick;
      if (round == 0)
        for (const auto& f : hb.morphisms)
          if (extends(acc, f)) {
            pick = f;
            break;
          }
      for (int t = 0; !pick && t < 64; ++t) {
        Morphism f = hb.random_element(rng);
        if (extends(acc, f)) pick = std::move(f);
      }
      if (!pick) {
        ok = false;
        break;
      }
      for (std::size_t v = 0; v < nv; ++v) {
        const Matrix parts[] = {acc[v], pick->at(v)};
        acc[v] = Matrix::hstack(parts);
      }
      chosen[c] = std::move(pick);
    }
    if (!ok) continue;
    std::vector<Matrix> mats;
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<Matrix> cols{Matrix(x.field(), x.dim(v), 0)};
      for (const auto& f : chosen) cols.push_back(f->at(v));
      mats.push_back(Matrix::hstack(cols));
    }
    Morphism iso(Morphism::Trusted{}, sum, std::make_shared<const Representation>(x), std::move(mats));
    if (is_injective(iso) && is_surjective(iso)) return iso;
  }
  throw std::runtime_error("could not assemble an isomorphism from the decomposition");
}

std::vector<long> canonical_decomposition(const DimVector& e, const IndecomposableTable& table) {
  if (e.size() != table.quiver.vertex_count()) throw std::invalid_argument("dimension vector does not match quiver");
  const std::size_t n = table.size();
  std::vector<long> mult(n, 0);
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t start, const DimVector& rest) -> bool {
    if (rest.is_zero()) return true;
    for (std::size_t u = start; u < n; ++u) {
      if (!fits_in(table.roots[u], rest) || table.ext(u, u) != 0) continue;
      bool orthogonal = true;
      for (auto w : chosen)
        if (table.ext(u, w) != 0 || table.ext(w, u) != 0) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      chosen.push_back(u);
      ++mult[u];
      if (self(self, u, rest - table.roots[u])) return true;
      --mult[u];
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0, e)) throw std::runtime_error("no Ext-orthogonal decomposition of " + e.to_string());
  return mult;
}

Representation generic_rep(const DimVector& e, const IndecomposableTable& table) {
  Representation g = assemble(table, canonical_decomposition(e, table));
  if (ext_dim(g, g) != 0) throw std::runtime_error("generic representation " + e.to_string() + " is not rigid");
  return g;
}

bool check_generic_embedding(const DimVector& e, const DimVector& d, const IndecomposableTable& table) {
  if (!fits_in(e, d)) throw std::invalid_argument(e.to_string() + " does not fit in " + d.to_string());
  const auto me = canonical_decomposition(e, table);
  const auto mq = canonical_decomposition(d - e, table);
  long ext = 0;
  for (std::size_t u = 0; u < table.size(); ++u)
    for (std::size_t v = 0; v < table.size(); ++v) ext += me[u] * mq[v] * table.ext(u, v);
  return ext == 0;
}

std::optional<Morphism> find_generic_embedding(const DimVector& e, const DimVector& d,
                                               const IndecomposableTable& table, std::uint64_t seed) {
  if (!fits_in(e, d)) throw std::invalid_argument(e.to_string() + " does not fit in " + d.to_string());
  const HomBasis basis = hom_basis(generic_rep(e, table), generic_rep(d, table));
  if (table.field.is_finite() && hom_space_size(basis) <= 1'000'000) return scan_injective(basis, 1'000'000);
  return sample_injective(basis, 256, seed);
}

}  // namespace quivemb
