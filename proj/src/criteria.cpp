#include "quivemb/criteria.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "quivemb/grassmannian.hpp"
#include "quivemb/subspace.hpp"

namespace quivemb {

namespace {

void require_same(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) throw std::invalid_argument("representations live on different quivers");
  if (!(a.field() == b.field())) throw std::invalid_argument("representations live over different fields");
}

void require_table(const Quiver& q, const Field& f, const IndecomposableTable& table) {
  if (!q.is_dynkin()) throw std::invalid_argument("quiver " + q.dynkin_name() + " is not of Dynkin type");
  if (!(q == table.quiver)) throw std::invalid_argument("table belongs to another quiver");
  if (!(f == table.field)) throw std::invalid_argument("table belongs to another field");
}

std::string root_label(const DimVector& d) { return "U=" + d.to_string(); }

std::vector<std::uint32_t> key_of(const Matrix& basis) {
  const Matrix c = canonical_basis(basis);
  std::vector<std::uint32_t> key(c.residues().begin(), c.residues().end());
  key.push_back(static_cast<std::uint32_t>(c.cols()));
  return key;
}

// Calls visit(v) for every nonzero vector of F_q^s whose first nonzero entry is 1.
void for_each_projective_point(const Field& f, std::size_t s, const std::function<void(const Matrix&)>& visit) {
  const std::uint32_t q = f.order();
  for (std::size_t lead = 0; lead < s; ++lead) {
    Matrix v(f, s, 1);
    v.set_int(lead, 0, 1);
    std::vector<std::uint32_t> digits(s - lead - 1, 0);
    while (true) {
      visit(v);
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) {
        digits[k] = 0;
        v.set(lead + 1 + k, 0, Scalar(0u));
        ++k;
      }
      if (k == digits.size()) break;
      v.set(lead + 1 + k, 0, Scalar(digits[k]));
    }
  }
}

std::uint64_t projective_point_count(std::uint32_t q, std::size_t s) {
  std::uint64_t total = 0, p = 1;
  for (std::size_t i = 0; i < s; ++i) {
    total += p;
    if (p > (std::uint64_t{1} << 60) / q) return UINT64_MAX;
    p *= q;
  }
  return total;
}

Matrix span_rank_columns(const std::vector<Matrix>& maps, const Matrix& w, std::size_t rows, const Field& f) {
  std::vector<Matrix> parts;
  for (const auto& g : maps) parts.push_back(g * w);
  if (parts.empty() || w.cols() == 0) return Matrix(f, rows, 0);
  return Matrix::hstack(parts);
}

// Vertical stack of the columns of b: the vector (b_1; ...; b_k).
Matrix stack_columns(const Matrix& b) {
  std::vector<Matrix> cols;
  for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
  return Matrix::vstack(cols);
}

// Simple subrepresentation of x spanned by `vec` at vertex i.
SubspaceFamily line_at(const Representation& x, std::size_t i, const Matrix& vec) {
  SubspaceFamily s;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) s.emplace_back(x.field(), x.dim(v), 0);
  s[i] = vec;
  return s;
}

QuotientWitness quotient_witness(const Representation& n, const Representation& m, std::size_t i,
                                 const Matrix& vec, std::size_t k) {
  const Representation u = power(n, k);
  const Representation v = quotient(u, line_at(u, i, vec)).rep;
  QuotientWitness w{i, k, vec, {}};
  w.brackets[0] = static_cast<long>(hom_dim(u, n));
  w.brackets[1] = static_cast<long>(hom_dim(v, n));
  w.brackets[2] = static_cast<long>(hom_dim(u, m));
  w.brackets[3] = static_cast<long>(hom_dim(v, m));
  return w;
}

const char* kNc2Label = "[N^k,N]-[N^k/S,N] <= [N^k,M]-[N^k/S,M]";

Inequality nc2_inequality(std::size_t i, std::size_t k, const Matrix& vec, long lhs, long rhs,
                          const Quiver& q) {
  std::string v = vec.transpose().to_string();
  return Inequality{std::string(kNc2Label) + "  S=S_" + q.label(i) + " k=" + std::to_string(k) + " v=" + v, lhs,
                    "<=", rhs};
}

// Socle data of n at vertex i: socle basis, End(n) acting on it, Hom(n, x) maps
// restricted to it.
struct SocleData {
  Matrix soc;
  std::vector<Matrix> end_ops;
};

SocleData socle_data(const Representation& n, const HomBasis& end, std::size_t i) {
  SocleData d{socle_at(n, i), {}};
  if (d.soc.cols() == 0) return d;
  for (const auto& f : end.morphisms) {
    auto c = solve(d.soc, f.at(i) * d.soc);
    if (!c) throw std::logic_error("endomorphism does not preserve the socle");
    d.end_ops.push_back(std::move(*c));
  }
  d.end_ops.push_back(Matrix::identity(n.field(), d.soc.cols()));
  return d;
}

std::vector<Matrix> restricted(const HomBasis& hom, std::size_t i, const Matrix& soc) {
  std::vector<Matrix> out;
  for (const auto& g : hom.morphisms) out.push_back(g.at(i) * soc);
  return out;
}

Verdict nc2_exhaustive(const Representation& n, const Representation& m, const Nc2Config& config) {
  Verdict out{"nc2", true, n.field().name(), {}, {}, {}, {}, {}};
  const HomBasis end = hom_basis(n, n);
  const HomBasis hnm = hom_basis(n, m);
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) {
    const SocleData sd = socle_data(n, end, i);
    const std::size_t s = sd.soc.cols();
    if (s == 0) continue;
    const auto maps = restricted(hnm, i, sd.soc);
    for (const Matrix& w : stable_subspaces(n.field(), s, sd.end_ops, config.budget)) {
      const long lhs = static_cast<long>(w.cols());
      const long rhs = static_cast<long>(rank(span_rank_columns(maps, w, m.dim(i), n.field())));
      const Matrix vec = stack_columns(sd.soc * w);
      out.ledger.push_back(nc2_inequality(i, w.cols(), vec, lhs, rhs, n.quiver()));
      if (lhs > rhs && out.holds) {
        out.holds = false;
        out.witness = quotient_witness(n, m, i, vec, w.cols());
      }
    }
  }
  return out;
}

Verdict nc2_raw(const Representation& n, const Representation& m, const Nc2Config& config) {
  Verdict out{"nc2", true, n.field().name(), {}, {}, {}, {}, {}};
  const long nn = static_cast<long>(hom_dim(n, n)), nm = static_cast<long>(hom_dim(n, m));
  std::uint64_t visited = 0;
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) {
    const Matrix soc = socle_at(n, i);
    const std::size_t s = soc.cols();
    for (std::size_t k = 1; k <= s; ++k) {
      const Representation u = power(n, k);
      visited += projective_point_count(n.field().order(), k * s);
      if (visited > config.budget) throw std::length_error("nc2 vector enumeration exceeds the budget");
      // Coordinates c in F_q^{ks} give the socle vector (soc c_1; ...; soc c_k).
      for_each_projective_point(n.field(), k * s, [&](const Matrix& c) {
        std::vector<Matrix> blocks;
        for (std::size_t j = 0; j < k; ++j) blocks.push_back(soc * c.block(j * s, 0, s, 1));
        const Matrix vec = Matrix::vstack(blocks);
        const Representation v = quotient(u, line_at(u, i, vec)).rep;
        const long vn = static_cast<long>(hom_dim(v, n)), vm = static_cast<long>(hom_dim(v, m));
        const long lhs = static_cast<long>(k) * nn - vn, rhs = static_cast<long>(k) * nm - vm;
        out.ledger.push_back(nc2_inequality(i, k, vec, lhs, rhs, n.quiver()));
        if (lhs > rhs && out.holds) {
          out.holds = false;
          out.witness = QuotientWitness{i, k, vec, {static_cast<long>(k) * nn, vn, static_cast<long>(k) * nm, vm}};
        }
      });
    }
  }
  return out;
}

Verdict nc2_sampling(const Representation& n, const Representation& m, const Nc2Config& config) {
  Verdict out{"nc2", true, n.field().name(), {}, {}, {}, {}, {}};
  out.notes.push_back("sampled " + std::to_string(config.samples) + " socle vectors; holding is evidence only");
  std::vector<std::size_t> verts;
  std::vector<Matrix> socs;
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) {
    socs.push_back(socle_at(n, i));
    if (socs.back().cols()) verts.push_back(i);
  }
  if (verts.empty()) return out;
  const long nn = static_cast<long>(hom_dim(n, n)), nm = static_cast<long>(hom_dim(n, m));
  for (std::size_t t = 0; t < config.samples; ++t) {
    Rng rng(derive_seed(config.seed, t));
    const std::size_t i = verts[rng() % verts.size()];
    const std::size_t s = socs[i].cols();
    const std::size_t k = 1 + rng() % s;
    const Matrix c = random_matrix(n.field(), s, k, rng, kDefaultBox);
    if (c.is_zero()) continue;
    const Matrix vec = stack_columns(socs[i] * c);
    const Representation u = power(n, k);
    const Representation v = quotient(u, line_at(u, i, vec)).rep;
    const long vn = static_cast<long>(hom_dim(v, n)), vm = static_cast<long>(hom_dim(v, m));
    const long lhs = static_cast<long>(k) * nn - vn, rhs = static_cast<long>(k) * nm - vm;
    out.ledger.push_back(nc2_inequality(i, k, vec, lhs, rhs, n.quiver()));
    if (lhs > rhs && out.holds) {
      out.holds = false;
      out.witness = QuotientWitness{i, k, vec, {static_cast<long>(k) * nn, vn, static_cast<long>(k) * nm, vm}};
    }
  }
  return out;
}

// Interval [first, last] (1-based positions along the path) of an A_n root.
std::pair<std::size_t, std::size_t> interval_of(const DimVector& root, const std::vector<std::size_t>& path) {
  std::size_t first = 0, last = 0;
  for (std::size_t p = 0; p < path.size(); ++p) {
    const long c = root[path[p]];
    if (c > 1) throw std::logic_error("A_n root with a coordinate above 1");
    if (c == 1) {
      if (first == 0) first = p + 1;
      else if (last != p) throw std::logic_error("A_n root with disconnected support");
      last = p + 1;
    }
  }
  return {first, last};
}

DimVector interval_dims(std::size_t a, std::size_t b, const std::vector<std::size_t>& path) {
  std::vector<long> d(path.size(), 0);
  for (std::size_t p = a; p <= b; ++p) d[path[p - 1]] = 1;
  return DimVector(d);
}

}  // namespace

std::vector<Matrix> stable_subspaces(const Field& field, std::size_t s, const std::vector<Matrix>& ops,
                                     std::uint64_t budget) {
  if (!field.is_finite()) throw std::invalid_argument("exhaustive socle enumeration needs a finite field");
  if (projective_point_count(field.order(), s) > budget)
    throw std::length_error("socle of dimension " + std::to_string(s) + " over " + field.name() +
                            " exceeds the enumeration budget");
  // Cyclic submodules, then all their sums.
  std::map<std::vector<std::uint32_t>, Matrix> found;
  std::vector<Matrix> cyclic;
  for_each_projective_point(field, s, [&](const Matrix& v) {
    std::vector<Matrix> parts{v};
    for (const auto& e : ops) parts.push_back(e * v);
    Matrix c = canonical_basis(Matrix::hstack(parts));
    if (found.emplace(key_of(c), c).second) cyclic.push_back(c);
  });
  std::vector<Matrix> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& c : cyclic) {
        const Matrix parts[] = {w, c};
        Matrix sum = canonical_basis(Matrix::hstack(parts));
        if (sum.cols() == w.cols()) continue;
        if (found.emplace(key_of(sum), sum).second) next.push_back(sum);
      }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  for (auto& [k, w] : found) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [](const Matrix& a, const Matrix& b) { return a.cols() < b.cols(); });
  return out;
}

HomProfile hom_profile(const Representation& m, const IndecomposableTable& table) {
  require_table(m.quiver(), m.field(), table);
  HomProfile p{m.dims(), std::vector<long>(table.size()), std::vector<long>(table.size())};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t u = 0; u < table.size(); ++u) {
    p.into[u] = static_cast<long>(hom_dim(table.reps[u], m));
    p.out_of[u] = static_cast<long>(hom_dim(m, table.reps[u]));
  }
  return p;
}

Verdict check_grassmannian_nonempty(const HomProfile& m, const DimVector& e, const IndecomposableTable& table) {
  Verdict out{"grassmannian-nonempty", true, table.field.name(), {}, {}, {}, {}, {}};
  if (e.size() != m.dims.size()) throw std::invalid_argument("dimension vector does not match quiver");
  // The projective inequalities [P_i,M] >= e_i already encode e <= dim M.
  if (!fits_in(e, m.dims)) out.notes.push_back("e exceeds dim M");
  for (std::size_t u = 0; u < table.size(); ++u) {
    const DimVector& du = table.roots[u];
    Inequality ineq{"[U,M] >= <dim U,e>  " + root_label(du), m.into[u], ">=", euler_form(table.quiver, du, e)};
    out.ledger.push_back(ineq);
    if (!ineq.holds() && out.holds) {
      out.holds = false;
      out.witness = IndecomposableWitness{"subrepresentation", du, ineq};
    }
  }
  return out;
}

Verdict check_grassmannian_nonempty(const Representation& m, const DimVector& e, const IndecomposableTable& table) {
  require_table(m.quiver(), m.field(), table);
  return check_grassmannian_nonempty(hom_profile(m, table), e, table);
}

Verdict check_grassmannian_irreducible(const HomProfile& m, const DimVector& e, const IndecomposableTable& table) {
  if (e.size() != m.dims.size()) throw std::invalid_argument("dimension vector does not match quiver");
  if (!fits_in(e, m.dims)) throw std::invalid_argument(e.to_string() + " does not fit in " + m.dims.to_string());
  Verdict out{"grassmannian-irreducible", true, table.field.name(), {}, {}, {}, {}, {}};
  out.notes.push_back("sufficient criterion only: failure says nothing about irreducibility");
  const DimVector rest = m.dims - e;
  for (std::size_t u = 0; u < table.size(); ++u) {
    if (table.injective[u]) continue;
    const DimVector& du = table.roots[u];
    Inequality ineq{"[M,U] <= <e,dim U>  " + root_label(du), m.out_of[u], "<=", euler_form(table.quiver, e, du)};
    out.ledger.push_back(ineq);
    if (!ineq.holds() && out.holds) {
      out.holds = false;
      out.witness = IndecomposableWitness{"non-injective", du, ineq};
    }
  }
  for (std::size_t u = 0; u < table.size(); ++u) {
    if (table.projective[u]) continue;
    const DimVector& du = table.roots[u];
    Inequality ineq{"[U,M] <= <dim U,dim M-e>  " + root_label(du), m.into[u], "<=",
                    euler_form(table.quiver, du, rest)};
    out.ledger.push_back(ineq);
    if (!ineq.holds() && out.holds) {
      out.holds = false;
      out.witness = IndecomposableWitness{"non-projective", du, ineq};
    }
  }
  if (out.holds) out.dimension = euler_form(table.quiver, e, rest);
  return out;
}

Verdict check_grassmannian_irreducible(const Representation& m, const DimVector& e,
                                       const IndecomposableTable& table) {
  require_table(m.quiver(), m.field(), table);
  return check_grassmannian_irreducible(hom_profile(m, table), e, table);
}

Verdict check_nc2(const Representation& n, const Representation& m, const Nc2Config& config) {
  require_same(n, m);
  if (!n.quiver().acyclic()) throw std::invalid_argument("nc2 needs an acyclic quiver");
  if (config.mode != Nc2Mode::Sampling && !n.field().is_finite())
    throw std::invalid_argument("exhaustive nc2 needs a finite field; use sampling mode over Q");
  switch (config.mode) {
    case Nc2Mode::Exhaustive:
      return nc2_exhaustive(n, m, config);
    case Nc2Mode::RawVectors:
      return nc2_raw(n, m, config);
    case Nc2Mode::Sampling:
      return nc2_sampling(n, m, config);
  }
  throw std::logic_error("unknown nc2 mode");
}

Verdict check_nc2_random_surjections(const Representation& n, const Representation& m, std::size_t trials,
                                     std::uint64_t seed) {
  require_same(n, m);
  if (!n.quiver().acyclic()) throw std::invalid_argument("nc2 needs an acyclic quiver");
  Verdict out{"nc2-random-surjections", true, n.field().name(), {}, {}, {}, {}, {}};
  out.notes.push_back(std::to_string(trials) + " random surjections; holding is evidence only");
  const Quiver& q = n.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::optional<SurjectionWitness>> hits(trials);
  std::vector<Inequality> ledger(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    // Source: a power of n or a random representation of nearby dimension.
    Representation u = n;
    if (rng() % 2 == 0) {
      u = power(n, 1 + rng() % 2);
    } else {
      std::vector<long> d;
      for (std::size_t v = 0; v < nv; ++v) d.push_back(static_cast<long>(rng() % (n.dim(v) + 2)));
      u = random_representation(q, DimVector(d), n.field(), rng(), 3);
    }
    // Subrepresentation generated by a random vector at a random vertex.
    SubspaceFamily sub;
    for (std::size_t v = 0; v < nv; ++v) sub.emplace_back(n.field(), u.dim(v), 0);
    const std::size_t start = rng() % nv;
    if (u.dim(start) > 0) {
      Matrix vec = random_matrix(n.field(), u.dim(start), 1, rng, 3);
      if (rng() % 2 == 0) {
        const Matrix soc = socle_at(u, start);
        if (soc.cols()) vec = soc * random_matrix(n.field(), soc.cols(), 1, rng, 3);
      }
      sub[start] = vec;
      for (auto v : q.topological_order())
        for (auto a : q.outgoing(v)) {
          const std::size_t w = q.arrow(a).target;
          const Matrix img = u.arrow(a) * sub[v];
          const Matrix parts[] = {sub[w], img};
          sub[w] = Matrix::hstack(parts);
        }
      for (auto& s : sub)
        if (s.cols()) s = column_space_basis(s);
    }
    const Representation v = quotient(u, sub).rep;
    const long b[4] = {static_cast<long>(hom_dim(u, n)), static_cast<long>(hom_dim(v, n)),
                       static_cast<long>(hom_dim(u, m)), static_cast<long>(hom_dim(v, m))};
    ledger[t] = Inequality{"[U,N]-[V,N] <= [U,M]-[V,M]  trial " + std::to_string(t) + " dim U=" +
                               u.dims().to_string() + " dim V=" + v.dims().to_string(),
                           b[0] - b[1], "<=", b[2] - b[3]};
    if (!ledger[t].holds()) hits[t] = SurjectionWitness{u, sub, {b[0], b[1], b[2], b[3]}};
  }
  out.ledger = std::move(ledger);
  for (auto& h : hits)
    if (h) {
      out.holds = false;
      out.witness = std::move(*h);
      break;
    }
  return out;
}

Nc2Profile nc2_profile(const Representation& n, const IndecomposableTable& table, const Nc2Config& config) {
  require_table(n.quiver(), n.field(), table);
  Nc2Profile out;
  const HomBasis end = hom_basis(n, n);
  std::vector<HomBasis> to_u;
  for (const auto& u : table.reps) to_u.push_back(hom_basis(n, u));
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) {
    const SocleData sd = socle_data(n, end, i);
    if (sd.soc.cols() == 0) continue;
    std::vector<std::vector<Matrix>> maps;
    for (const auto& h : to_u) maps.push_back(restricted(h, i, sd.soc));
    for (const Matrix& w : stable_subspaces(n.field(), sd.soc.cols(), sd.end_ops, config.budget)) {
      Nc2Profile::Row row{i, static_cast<long>(w.cols()), {}};
      for (std::size_t u = 0; u < table.size(); ++u)
        row.per_root.push_back(
            static_cast<long>(rank(span_rank_columns(maps[u], w, table.reps[u].dim(i), n.field()))));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

bool nc2_holds(const Nc2Profile& profile, const std::vector<long>& multiplicities) {
  for (const auto& row : profile.rows) {
    long rhs = 0;
    for (std::size_t u = 0; u < row.per_root.size(); ++u) rhs += multiplicities.at(u) * row.per_root[u];
    if (row.dim > rhs) return false;
  }
  return true;
}

Decomposed decompose_with_iso(const Representation& x, const IndecomposableTable& table) {
  auto mult = decompose(x, table);
  Morphism iso = decomposition_isomorphism(x, table, mult);
  return Decomposed{x, std::move(mult), std::move(iso)};
}

Verdict an_criterion(const Representation& n, const Representation& m, const IndecomposableTable& table) {
  require_same(n, m);
  require_table(n.quiver(), n.field(), table);
  if (!n.quiver().equioriented_path()) throw std::invalid_argument("an_criterion needs an equioriented A_n quiver");
  return an_criterion(decompose_with_iso(n, table), decompose_with_iso(m, table), table);
}

Verdict an_criterion(const Decomposed& n, const Decomposed& m, const IndecomposableTable& table) {
  const auto path = table.quiver.equioriented_path();
  if (!path) throw std::invalid_argument("an_criterion needs an equioriented A_n quiver");
  const std::size_t len = path->size();
  Verdict out{"an-criterion", true, table.field.name(), {}, {}, {}, {}, {}};

  std::vector<std::pair<std::size_t, std::size_t>> iv;
  for (const auto& r : table.roots) iv.push_back(interval_of(r, *path));
  // nm[a][b], mm[a][b]: multiplicity of U_{a,b}.
  std::vector<std::vector<long>> nm(len + 1, std::vector<long>(len + 1, 0)), mm = nm;
  for (std::size_t u = 0; u < table.size(); ++u) {
    nm[iv[u].first][iv[u].second] += n.multiplicities[u];
    mm[iv[u].first][iv[u].second] += m.multiplicities[u];
  }
  for (std::size_t j = 1; j <= len; ++j) {
    long ln = 0, lm = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      ln += nm[i][j];
      lm += mm[i][j];
      Inequality ineq{"sum_{k<=" + std::to_string(i) + "} n_{k," + std::to_string(j) + "} <= sum_{k<=" +
                          std::to_string(i) + "} m_{k," + std::to_string(j) + "}",
                      ln, "<=", lm};
      out.ledger.push_back(ineq);
      if (!ineq.holds() && out.holds) {
        out.holds = false;
        out.witness = IndecomposableWitness{"prefix", interval_dims(i, j, *path), ineq};
      }
    }
  }
  if (!out.holds) return out;

  // Summand copies in assembled block order.
  auto copies = [&](const std::vector<long>& mult) {
    std::vector<std::size_t> c;
    for (std::size_t u = 0; u < table.size(); ++u)
      for (long k = 0; k < mult[u]; ++k) c.push_back(u);
    return c;
  };
  const auto nc = copies(n.multiplicities), mc = copies(m.multiplicities);
  // Match, for each end point j, the t-th n-interval to the t-th m-interval in
  // order of start points.
  std::vector<std::size_t> target(nc.size());
  for (std::size_t j = 1; j <= len; ++j) {
    std::vector<std::size_t> ns, ms;
    for (std::size_t c = 0; c < nc.size(); ++c)
      if (iv[nc[c]].second == j) ns.push_back(c);
    for (std::size_t c = 0; c < mc.size(); ++c)
      if (iv[mc[c]].second == j) ms.push_back(c);
    auto by_start = [&](const std::vector<std::size_t>& cs, const std::vector<std::size_t>& kind) {
      return [&cs, &kind, &iv](std::size_t a, std::size_t b) {
        (void)cs;
        return iv[kind[a]].first < iv[kind[b]].first;
      };
    };
    std::stable_sort(ns.begin(), ns.end(), by_start(ns, nc));
    std::stable_sort(ms.begin(), ms.end(), by_start(ms, mc));
    for (std::size_t t = 0; t < ns.size(); ++t) target[ns[t]] = ms.at(t);
  }

  const Representation& dn = n.iso.source();
  const Representation& dm = m.iso.source();
  const std::size_t nv = table.quiver.vertex_count();
  // Block offsets per vertex.
  auto offsets = [&](const std::vector<std::size_t>& cs) {
    std::vector<std::vector<std::size_t>> off(cs.size() + 1, std::vector<std::size_t>(nv, 0));
    for (std::size_t c = 0; c < cs.size(); ++c)
      for (std::size_t v = 0; v < nv; ++v) off[c + 1][v] = off[c][v] + table.reps[cs[c]].dim(v);
    return off;
  };
  const auto noff = offsets(nc), moff = offsets(mc);
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < nv; ++v) mats.emplace_back(table.field, dm.dim(v), dn.dim(v));
  for (std::size_t c = 0; c < nc.size(); ++c) {
    const HomBasis hb = hom_basis(table.reps[nc[c]], table.reps[mc[target[c]]]);
    if (hb.dim() != 1) throw std::logic_error("interval embedding space is not one-dimensional");
    for (std::size_t v = 0; v < nv; ++v)
      if (hb.morphisms[0].at(v).size()) mats[v].set_block(moff[target[c]][v], noff[c][v], hb.morphisms[0].at(v));
  }
  const Morphism iota(Morphism::Trusted{}, n.iso.source_ptr(), m.iso.source_ptr(), std::move(mats));
  std::vector<Matrix> inv;
  for (std::size_t v = 0; v < nv; ++v) inv.push_back(*inverse(n.iso.at(v)));
  const Morphism phi_inv(Morphism::Trusted{}, std::make_shared<const Representation>(n.rep), n.iso.source_ptr(),
                         std::move(inv));
  const Morphism f = compose(m.iso, compose(iota, phi_inv));
  // Re-validate intertwining and injectivity before reporting.
  Morphism checked(n.rep, m.rep, f.vertex_mats());
  if (!is_injective(checked)) throw std::logic_error("assembled interval embedding is not injective");
  out.embedding = std::move(checked);
  return out;
}

Verdict check_dual_surjection(const Representation& u, const Representation& v, const Nc2Config& config) {
  require_same(u, v);
  if (!u.quiver().acyclic()) throw std::invalid_argument("needs an acyclic quiver");
  if (!u.field().is_finite()) throw std::invalid_argument("exhaustive check needs a finite field");
  Verdict out{"dual-surjection", true, u.field().name(), {}, {}, {}, {}, {}};
  const Quiver& q = u.quiver();
  const HomBasis end = hom_basis(v, v);
  const HomBasis huv = hom_basis(u, v);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    // Top functionals: phi with phi X_a = 0 for every arrow a into i (columns).
    Matrix top = Matrix::identity(u.field(), v.dim(i));
    if (!q.incoming(i).empty()) {
      std::vector<Matrix> rows;
      for (auto a : q.incoming(i)) rows.push_back(v.arrow(a).transpose());
      top = kernel_basis(Matrix::vstack(rows));
    }
    const std::size_t t = top.cols();
    if (t == 0) continue;
    std::vector<Matrix> ops;
    for (const auto& e : end.morphisms) ops.push_back(*solve(top, e.at(i).transpose() * top));
    ops.push_back(Matrix::identity(u.field(), t));
    std::vector<Matrix> maps;
    for (const auto& g : huv.morphisms) maps.push_back(g.at(i).transpose() * top);
    for (const Matrix& w : stable_subspaces(u.field(), t, ops, config.budget)) {
      const long lhs = static_cast<long>(w.cols());
      const long rhs = static_cast<long>(rank(span_rank_columns(maps, w, u.dim(i), u.field())));
      const Matrix phi = stack_columns(top * w).transpose();
      out.ledger.push_back(Inequality{"[V,V^k]-[V,K] <= [U,V^k]-[U,K]  T=S_" + q.label(i) +
                                          " k=" + std::to_string(w.cols()) + " phi=" + phi.to_string(),
                                      lhs, "<=", rhs});
      if (lhs > rhs && out.holds) {
        out.holds = false;
        const std::size_t k = w.cols();
        const Representation vk = power(v, k);
        SubspaceFamily ker;
        for (std::size_t x = 0; x < q.vertex_count(); ++x) ker.push_back(Matrix::identity(u.field(), vk.dim(x)));
        ker[i] = kernel_basis(phi);
        const Representation kr = restrict_to(vk, ker).rep;
        TopWitness tw{i, k, phi, {}};
        tw.brackets[0] = static_cast<long>(hom_dim(v, vk));
        tw.brackets[1] = static_cast<long>(hom_dim(v, kr));
        tw.brackets[2] = static_cast<long>(hom_dim(u, vk));
        tw.brackets[3] = static_cast<long>(hom_dim(u, kr));
        out.witness = tw;
      }
    }
  }
  return out;
}

SlopeResult min_slope(const Representation& m, const DimVector& e, const IndecomposableTable* table) {
  const Quiver& q = m.quiver();
  if (e.size() != q.vertex_count()) throw std::invalid_argument("dimension vector does not match quiver");
  const bool by_walk = m.field().is_finite();
  if (!by_walk && !table) throw std::invalid_argument("semistability over Q needs a Dynkin table");
  std::optional<HomProfile> prof;
  if (!by_walk) prof = hom_profile(m, *table);
  auto subs = sub_dim_vectors(m.dims());
  std::stable_sort(subs.begin(), subs.end(), [&](const DimVector& a, const DimVector& b) {
    return functional(q, e, a) < functional(q, e, b);
  });
  for (const auto& d : subs) {
    const long val = functional(q, e, d);
    if (by_walk) {
      if (auto s = find_subrep(m, d)) return SlopeResult{val, SubrepWitness{d, val, std::move(*s)}};
    } else if (check_grassmannian_nonempty(*prof, d, *table).holds) {
      return SlopeResult{val, SubrepWitness{d, val, {}}};
    }
  }
  throw std::logic_error("the zero subrepresentation was not found");
}

Verdict is_semistable(const Representation& m, const DimVector& e, const IndecomposableTable* table) {
  Verdict out{"semistable", true, m.field().name(), {}, {}, {}, {}, {}};
  const long em = functional(m.quiver(), e, m.dims());
  out.ledger.push_back(Inequality{"e(M) = 0", em, "<=", 0});
  out.ledger.push_back(Inequality{"e(M) = 0", em, ">=", 0});
  const SlopeResult slope = min_slope(m, e, table);
  out.ledger.push_back(Inequality{"min e(N) >= 0  N=" + slope.attained_by.dims.to_string(), slope.value, ">=", 0});
  out.dimension = slope.value;
  if (em != 0) {
    out.holds = false;
    out.witness = SubrepWitness{m.dims(), em, {}};
  } else if (slope.value < 0) {
    out.holds = false;
    out.witness = slope.attained_by;
  }
  return out;
}

}  // namespace quivemb
