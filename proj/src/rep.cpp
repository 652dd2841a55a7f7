#include "quivemb/rep.hpp"

#include <map>
#include <stdexcept>

namespace quivemb {

Scalar random_scalar(const Field& field, Rng& rng, long box) {
  if (field.is_rational()) {
    std::uniform_int_distribution<long> dist(-box, box);
    return Scalar::from_int(field, dist(rng));
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, field.order() - 1);
  return Scalar(dist(rng));
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng, long box) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(field, rng, box));
  return m;
}

Representation::Representation(Quiver quiver, Field field, DimVector dims, std::vector<Matrix> arrow_mats)
    : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), mats_(std::move(arrow_mats)) {
  if (dims_.size() != quiver_.vertex_count()) throw std::invalid_argument("dimension vector does not match quiver");
  if (mats_.size() != quiver_.arrow_count()) throw std::invalid_argument("one matrix per arrow required");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto& arr = quiver_.arrow(a);
    if (!(mats_[a].field() == field_)) throw std::invalid_argument("arrow matrix over the wrong field");
    if (mats_[a].rows() != dim(arr.target) || mats_[a].cols() != dim(arr.source))
      throw std::invalid_argument("arrow matrix " + std::to_string(a) + " has shape " +
                                  std::to_string(mats_[a].rows()) + "x" + std::to_string(mats_[a].cols()) +
                                  ", expected " + std::to_string(dim(arr.target)) + "x" +
                                  std::to_string(dim(arr.source)));
  }
}

Representation Representation::zero(const Quiver& quiver, const Field& field) {
  std::vector<Matrix> mats(quiver.arrow_count(), Matrix(field, 0, 0));
  return Representation(quiver, field, DimVector::zero(quiver.vertex_count()), std::move(mats));
}

Representation Representation::simple(const Quiver& quiver, const Field& field, std::size_t vertex) {
  const DimVector d = DimVector::unit(quiver.vertex_count(), vertex);
  std::vector<Matrix> mats;
  for (const auto& a : quiver.arrows())
    mats.emplace_back(field, static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
  return Representation(quiver, field, d, std::move(mats));
}

Representation Representation::reduced_to(const Field& target) const {
  std::vector<Matrix> mats;
  for (const auto& m : mats_) mats.push_back(m.reduced_to(target));
  return Representation(quiver_, target, dims_, std::move(mats));
}

namespace {

void check_compatible(const Representation& x, const Representation& y, const char* what) {
  if (!(x.quiver() == y.quiver())) throw std::invalid_argument(std::string(what) + ": quiver mismatch");
  if (!(x.field() == y.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

bool intertwines(const Representation& x, const Representation& y, const std::vector<Matrix>& f) {
  for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) {
    const auto& arr = x.quiver().arrow(a);
    if (!(f[arr.target] * x.arrow(a) == y.arrow(a) * f[arr.source])) return false;
  }
  return true;
}

std::vector<std::size_t> hom_offsets(const Representation& x, const Representation& y) {
  std::vector<std::size_t> off(x.quiver().vertex_count() + 1, 0);
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) off[v + 1] = off[v] + y.dim(v) * x.dim(v);
  return off;
}

}  // namespace

Morphism::Morphism(RepPtr source, RepPtr target, std::vector<Matrix> vertex_mats)
    : Morphism(Trusted{}, std::move(source), std::move(target), std::move(vertex_mats)) {
  check_compatible(*source_, *target_, "morphism");
  if (mats_.size() != source_->quiver().vertex_count()) throw std::invalid_argument("one matrix per vertex required");
  for (std::size_t v = 0; v < mats_.size(); ++v)
    if (mats_[v].rows() != target_->dim(v) || mats_[v].cols() != source_->dim(v) ||
        !(mats_[v].field() == source_->field()))
      throw std::invalid_argument("vertex matrix " + std::to_string(v) + " has the wrong shape");
  if (!intertwines(*source_, *target_, mats_)) throw std::invalid_argument("maps do not intertwine the arrows");
}

Morphism::Morphism(const Representation& source, const Representation& target, std::vector<Matrix> vertex_mats)
    : Morphism(std::make_shared<const Representation>(source), std::make_shared<const Representation>(target),
               std::move(vertex_mats)) {}

Morphism::Morphism(Trusted, RepPtr source, RepPtr target, std::vector<Matrix> vertex_mats)
    : source_(std::move(source)), target_(std::move(target)), mats_(std::move(vertex_mats)) {}

Morphism Morphism::identity(const Representation& x) {
  auto p = std::make_shared<const Representation>(x);
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) mats.push_back(Matrix::identity(x.field(), x.dim(v)));
  return Morphism(Trusted{}, p, p, std::move(mats));
}

Morphism Morphism::zero(RepPtr source, RepPtr target) {
  check_compatible(*source, *target, "morphism");
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < source->quiver().vertex_count(); ++v)
    mats.emplace_back(source->field(), target->dim(v), source->dim(v));
  return Morphism(Trusted{}, std::move(source), std::move(target), std::move(mats));
}

std::vector<long> Morphism::rank_vector() const {
  std::vector<long> r;
  for (const auto& m : mats_) r.push_back(static_cast<long>(rank(m)));
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: target/source mismatch");
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < f.vertex_mats().size(); ++v) mats.push_back(g.at(v) * f.at(v));
  return Morphism(Morphism::Trusted{}, f.source_ptr(), g.target_ptr(), std::move(mats));
}

bool is_injective(const Morphism& f) {
  for (const auto& m : f.vertex_mats())
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_surjective(const Morphism& f) {
  for (const auto& m : f.vertex_mats())
    if (rank(m) != m.rows()) return false;
  return true;
}

Matrix intertwining_system(const Representation& x, const Representation& y) {
  check_compatible(x, y, "hom");
  const Quiver& q = x.quiver();
  const Field& field = x.field();
  const auto off = hom_offsets(x, y);
  std::size_t eqs = 0;
  std::vector<std::size_t> row_off;
  for (const auto& arr : q.arrows()) {
    row_off.push_back(eqs);
    eqs += y.dim(arr.target) * x.dim(arr.source);
  }
  Matrix sys(field, eqs, off.back());

  // Row (p, c) of arrow a : s -> t is entry (p, c) of f_t X_a - Y_a f_s.
  auto fill = [&](auto entries, auto accumulate) {
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      const std::size_t xs = x.dim(arr.source), xt = x.dim(arr.target);
      const std::size_t ys = y.dim(arr.source), yt = y.dim(arr.target);
      const Matrix& xa = x.arrow(a);
      const Matrix& ya = y.arrow(a);
      for (std::size_t p = 0; p < yt; ++p)
        for (std::size_t c = 0; c < xs; ++c) {
          const std::size_t row = row_off[a] + p * xs + c;
          for (std::size_t k = 0; k < xt; ++k)  // f_t[p][k] * X_a[k][c]
            accumulate(entries[row * sys.cols() + off[arr.target] + p * xt + k], xa, k, c, false);
          for (std::size_t k = 0; k < ys; ++k)  // -Y_a[p][k] * f_s[k][c]
            accumulate(entries[row * sys.cols() + off[arr.source] + k * xs + c], ya, p, k, true);
        }
    }
  };
  if (field.is_rational()) {
    fill(sys.rationals(), [](mpq_class& e, const Matrix& m, std::size_t r, std::size_t c, bool negate) {
      const mpq_class& v = m.rationals()[r * m.cols() + c];
      if (negate)
        e -= v;
      else
        e += v;
    });
  } else {
    fill(sys.residues(), [&field](std::uint32_t& e, const Matrix& m, std::size_t r, std::size_t c, bool negate) {
      const std::uint32_t v = m.residues()[r * m.cols() + c];
      e = negate ? field.sub(e, v) : field.add(e, v);
    });
  }
  return sys;
}

namespace {

std::vector<Matrix> unflatten(const Matrix& coords, std::size_t col, const Representation& x,
                              const Representation& y, const std::vector<std::size_t>& off) {
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) {
    Matrix m(x.field(), y.dim(v), x.dim(v));
    for (std::size_t r = 0; r < y.dim(v); ++r)
      for (std::size_t c = 0; c < x.dim(v); ++c) m.set(r, c, coords.at(off[v] + r * x.dim(v) + c, col));
    mats.push_back(std::move(m));
  }
  return mats;
}

}  // namespace

HomBasis hom_basis(const Representation& x, const Representation& y) {
  HomBasis out{std::make_shared<const Representation>(x), std::make_shared<const Representation>(y),
               kernel_basis(intertwining_system(x, y)), {}};
  const auto off = hom_offsets(x, y);
  for (std::size_t k = 0; k < out.coordinates.cols(); ++k)
    out.morphisms.emplace_back(Morphism::Trusted{}, out.source, out.target,
                               unflatten(out.coordinates, k, x, y, off));
  return out;
}

Morphism HomBasis::combination(std::span<const Scalar> coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("combination: coefficient count mismatch");
  Matrix flat(source->field(), coordinates.rows(), 1);
  for (std::size_t k = 0; k < dim(); ++k)
    if (!coeffs[k].is_zero()) flat.add_scaled(coeffs[k], coordinates.column(k));
  return Morphism(Morphism::Trusted{}, source, target, unflatten(flat, 0, *source, *target, hom_offsets(*source, *target)));
}

Morphism HomBasis::random_element(Rng& rng, long box) const {
  std::vector<Scalar> coeffs;
  for (std::size_t k = 0; k < dim(); ++k) coeffs.push_back(random_scalar(source->field(), rng, box));
  return combination(coeffs);
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
  const Matrix sys = intertwining_system(x, y);
  return sys.cols() - rank(sys);
}

long ext_dim(const Representation& x, const Representation& y) {
  if (!x.quiver().acyclic()) throw std::invalid_argument("ext_dim: quiver has an oriented cycle");
  return static_cast<long>(hom_dim(x, y)) - euler_form(x.quiver(), x.dims(), y.dims());
}

long ext_dim_via_resolution(const Representation& x, const Representation& y) {
  if (!x.quiver().acyclic()) throw std::invalid_argument("ext_dim: quiver has an oriented cycle");
  const Matrix sys = intertwining_system(x, y);
  return static_cast<long>(sys.rows()) - static_cast<long>(rank(sys));
}

Matrix socle_at(const Representation& x, std::size_t v) {
  std::vector<Matrix> outs;
  for (auto a : x.quiver().outgoing(v)) outs.push_back(x.arrow(a));
  if (outs.empty()) return Matrix::identity(x.field(), x.dim(v));
  return kernel_basis(Matrix::vstack(outs));
}

namespace {

SubspaceFamily independent(const Representation& x, const SubspaceFamily& sub) {
  if (sub.size() != x.quiver().vertex_count()) throw std::invalid_argument("one subspace per vertex required");
  SubspaceFamily out;
  for (std::size_t v = 0; v < sub.size(); ++v) {
    if (sub[v].rows() != x.dim(v)) throw std::invalid_argument("subspace basis has the wrong ambient dimension");
    out.push_back(sub[v].cols() == 0 ? sub[v] : column_space_basis(sub[v]));
  }
  return out;
}

}  // namespace

bool is_arrow_stable(const Representation& x, const SubspaceFamily& sub) {
  const SubspaceFamily s = independent(x, sub);
  for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) {
    const auto& arr = x.quiver().arrow(a);
    const Matrix image = x.arrow(a) * s[arr.source];
    if (image.cols() == 0 || image.is_zero()) continue;
    const Matrix parts[] = {s[arr.target], image};
    if (rank(Matrix::hstack(parts)) != s[arr.target].cols()) return false;
  }
  return true;
}

Quotient quotient(const Representation& x, const SubspaceFamily& sub) {
  const SubspaceFamily s = independent(x, sub);
  if (!is_arrow_stable(x, s)) throw std::invalid_argument("quotient: subspaces are not arrow-stable");
  const std::size_t n = x.quiver().vertex_count();
  std::vector<Matrix> proj, comp;
  std::vector<long> qd;
  for (std::size_t v = 0; v < n; ++v) {
    const Matrix c = complement_columns(s[v]);
    const Matrix parts[] = {s[v], c};
    const Matrix inv = *inverse(Matrix::hstack(parts));
    proj.push_back(inv.block(s[v].cols(), 0, c.cols(), x.dim(v)));
    comp.push_back(c);
    qd.push_back(static_cast<long>(c.cols()));
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) {
    const auto& arr = x.quiver().arrow(a);
    mats.push_back(proj[arr.target] * x.arrow(a) * comp[arr.source]);
  }
  auto qrep = std::make_shared<const Representation>(x.quiver(), x.field(), DimVector(qd), std::move(mats));
  Morphism pi(Morphism::Trusted{}, std::make_shared<const Representation>(x), qrep, std::move(proj));
  return Quotient{*qrep, std::move(pi)};
}

Subrepresentation restrict_to(const Representation& x, const SubspaceFamily& sub) {
  const SubspaceFamily s = independent(x, sub);
  std::vector<Matrix> mats;
  std::vector<long> sd;
  for (std::size_t v = 0; v < s.size(); ++v) sd.push_back(static_cast<long>(s[v].cols()));
  for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) {
    const auto& arr = x.quiver().arrow(a);
    const Matrix image = x.arrow(a) * s[arr.source];
    if (s[arr.target].cols() == 0 || image.cols() == 0) {
      if (!image.is_zero()) throw std::invalid_argument("restrict_to: subspaces are not arrow-stable");
      mats.emplace_back(x.field(), s[arr.target].cols(), s[arr.source].cols());
      continue;
    }
    auto coords = solve(s[arr.target], image);
    if (!coords) throw std::invalid_argument("restrict_to: subspaces are not arrow-stable");
    mats.push_back(std::move(*coords));
  }
  auto srep = std::make_shared<const Representation>(x.quiver(), x.field(), DimVector(sd), std::move(mats));
  Morphism inc(Morphism::Trusted{}, srep, std::make_shared<const Representation>(x), s);
  return Subrepresentation{*srep, std::move(inc)};
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const auto& first = parts[0];
  DimVector d = DimVector::zero(first.quiver().vertex_count());
  for (const auto& p : parts) {
    check_compatible(first, p, "direct_sum");
    d = d + p.dims();
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < first.quiver().arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow(a));
    mats.push_back(Matrix::block_diagonal(blocks));
  }
  return Representation(first.quiver(), first.field(), d, std::move(mats));
}

Representation power(const Representation& x, std::size_t r) {
  if (r == 0) return Representation::zero(x.quiver(), x.field());
  std::vector<Representation> parts(r, x);
  return direct_sum(parts);
}

Morphism block_morphism(const Representation& x, std::size_t c, const Representation& y, std::size_t r,
                        std::span<const Morphism> blocks) {
  if (blocks.size() != r * c) throw std::invalid_argument("block_morphism: wrong number of blocks");
  auto src = std::make_shared<const Representation>(power(x, c));
  auto tgt = std::make_shared<const Representation>(power(y, r));
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) {
    Matrix m(x.field(), r * y.dim(v), c * x.dim(v));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set_block(i * y.dim(v), j * x.dim(v), blocks[i * c + j].at(v));
    mats.push_back(std::move(m));
  }
  return Morphism(Morphism::Trusted{}, std::move(src), std::move(tgt), std::move(mats));
}

Morphism direct_sum(std::span<const Morphism> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  std::vector<Representation> srcs, tgts;
  for (const auto& f : parts) {
    srcs.push_back(f.source());
    tgts.push_back(f.target());
  }
  auto src = std::make_shared<const Representation>(direct_sum(srcs));
  auto tgt = std::make_shared<const Representation>(direct_sum(tgts));
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < src->quiver().vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& f : parts) blocks.push_back(f.at(v));
    mats.push_back(Matrix::block_diagonal(blocks));
  }
  return Morphism(Morphism::Trusted{}, std::move(src), std::move(tgt), std::move(mats));
}

Representation random_representation(const Quiver& q, const DimVector& d, const Field& field, std::uint64_t seed,
                                     long box) {
  Rng rng(seed);
  std::vector<Matrix> mats;
  for (const auto& a : q.arrows())
    mats.push_back(random_matrix(field, static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]),
                                 rng, box));
  return Representation(q, field, d, std::move(mats));
}

Representation build_projective(const Quiver& q, const Field& field, std::size_t i) {
  if (!q.acyclic()) throw std::invalid_argument("build_projective: quiver has an oriented cycle");
  // Paths from i, listed by length then by arrow index; grouped per endpoint.
  using Path = std::vector<std::size_t>;
  std::vector<std::vector<Path>> at(q.vertex_count());
  std::vector<std::pair<std::size_t, Path>> frontier{{i, {}}};
  at[i].push_back({});
  while (!frontier.empty()) {
    std::vector<std::pair<std::size_t, Path>> next;
    for (const auto& [end, path] : frontier)
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != end) continue;
        Path ext = path;
        ext.push_back(a);
        at[q.arrow(a).target].push_back(ext);
        next.emplace_back(q.arrow(a).target, std::move(ext));
      }
    frontier = std::move(next);
  }
  std::vector<long> dims;
  std::vector<std::map<Path, std::size_t>> index(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    dims.push_back(static_cast<long>(at[v].size()));
    for (std::size_t k = 0; k < at[v].size(); ++k) index[v][at[v][k]] = k;
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix m(field, at[arr.target].size(), at[arr.source].size());
    for (std::size_t k = 0; k < at[arr.source].size(); ++k) {
      Path ext = at[arr.source][k];
      ext.push_back(a);
      m.set_int(index[arr.target].at(ext), k, 1);
    }
    mats.push_back(std::move(m));
  }
  return Representation(q, field, DimVector(dims), std::move(mats));
}

Representation build_injective(const Quiver& q, const Field& field, std::size_t i) {
  return dual(build_projective(q.opposite(), field, i));
}

Representation dual(const Representation& x) {
  std::vector<Matrix> mats;
  for (const auto& m : x.arrow_mats()) mats.push_back(m.transpose());
  return Representation(x.quiver().opposite(), x.field(), x.dims(), std::move(mats));
}

Morphism dual(const Morphism& f) {
  std::vector<Matrix> mats;
  for (const auto& m : f.vertex_mats()) mats.push_back(m.transpose());
  return Morphism(Morphism::Trusted{}, std::make_shared<const Representation>(dual(f.target())),
                  std::make_shared<const Representation>(dual(f.source())), std::move(mats));
}

}  // namespace quivemb
