#include "quivemb/grassmannian.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "quivemb/subspace.hpp"

namespace quivemb {

namespace {

// Vertices in `closed` form an independent set and are counted in closed form
// (or listed last); the others are walked in topological order.
struct Plan {
  bool dual = false;
  Representation rep;
  DimVector e;
  std::vector<std::size_t> walked;
  std::vector<bool> closed;
  mpz_class estimate;
};

Plan make_plan(const Representation& m, const DimVector& e, bool allow_dual) {
  const Quiver& q = m.quiver();
  const std::size_t n = q.vertex_count();
  if (n > 20) throw std::invalid_argument("Grassmannian walk supports at most 20 vertices");
  std::vector<std::pair<bool, Representation>> sides{{false, m}};
  if (allow_dual) sides.emplace_back(true, dual(m));
  std::optional<Plan> best;
  for (auto& [is_dual, rep] : sides) {
    const DimVector ee = is_dual ? m.dims() - e : e;
    const auto& topo = rep.quiver().topological_order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool independent = true;
      for (const auto& a : rep.quiver().arrows())
        if ((mask >> a.source & 1) && (mask >> a.target & 1)) independent = false;
      if (!independent) continue;
      mpz_class est = 1;
      for (std::size_t v = 0; v < n; ++v)
        if (!(mask >> v & 1)) est *= gaussian_binomial(rep.dims()[v], ee[v], rep.field().order());
      if (best && est >= best->estimate) continue;
      Plan p{is_dual, rep, ee, {}, std::vector<bool>(n, false), est};
      for (std::size_t v = 0; v < n; ++v) p.closed[v] = mask >> v & 1;
      for (auto v : topo)
        if (!p.closed[v]) p.walked.push_back(v);
      best = std::move(p);
    }
  }
  return std::move(*best);
}

enum class Mode { Count, List, First };

Matrix span_of(const Field& f, std::size_t rows, std::vector<Matrix> parts) {
  std::erase_if(parts, [](const Matrix& p) { return p.cols() == 0; });
  if (parts.empty()) return Matrix(f, rows, 0);
  const Matrix all = Matrix::hstack(parts);
  return column_space_basis(all);
}

class Walker {
 public:
  Walker(const Plan& plan, Mode mode, std::uint64_t budget, std::atomic<std::uint64_t>& visits)
      : plan_(plan), rep_(plan.rep), q_(rep_.quiver()), mode_(mode), budget_(budget), visits_(visits) {
    for (std::size_t v = 0; v < q_.vertex_count(); ++v) chosen_.emplace_back(rep_.field(), rep_.dim(v), 0);
    is_set_.assign(q_.vertex_count(), false);
  }

  // Candidates for the first walked vertex.
  std::vector<Matrix> first_choices() {
    std::vector<Matrix> out;
    const std::size_t v = plan_.walked.front();
    candidates(v, [&](const Matrix& u) {
      out.push_back(u);
      return true;
    });
    return out;
  }

  // Continue the walk with walked[0] fixed to u (or from scratch when nothing is walked).
  void run_from(const Matrix* u) {
    if (plan_.walked.empty()) {
      closed_phase();
      return;
    }
    set(plan_.walked[0], *u);
    if (feasible_after(plan_.walked[0])) walk(1);
    unset(plan_.walked[0]);
  }

  mpz_class total = 0;
  std::vector<SubspaceFamily> found;
  bool stop = false;

 private:
  void tick() {
    if (visits_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetExceeded("Grassmannian walk exceeded the budget of " + std::to_string(budget_) +
                               " echelon-pattern visits (plan estimate " + plan_.estimate.get_str() + ")",
                           plan_.estimate);
  }

  void set(std::size_t v, const Matrix& u) {
    chosen_[v] = u;
    is_set_[v] = true;
  }
  void unset(std::size_t v) { is_set_[v] = false; }

  // Sum of images into v from vertices already fixed.
  Matrix lower(std::size_t v) const {
    std::vector<Matrix> parts;
    for (auto a : q_.incoming(v)) {
      const std::size_t s = q_.arrow(a).source;
      if (is_set_[s]) parts.push_back(rep_.arrow(a) * chosen_[s]);
    }
    return span_of(rep_.field(), rep_.dim(v), std::move(parts));
  }

  // Intersection of preimages of the fixed successors of v.
  Matrix upper(std::size_t v) const {
    Matrix b = Matrix::identity(rep_.field(), rep_.dim(v));
    for (auto a : q_.outgoing(v)) {
      const std::size_t t = q_.arrow(a).target;
      if (is_set_[t]) b = intersect(b, preimage(rep_.arrow(a), chosen_[t]));
    }
    return b;
  }

  void candidates(std::size_t v, const std::function<bool(const Matrix&)>& visit) {
    const Matrix a = lower(v);
    const Matrix b = Matrix::identity(rep_.field(), rep_.dim(v));
    for_each_subspace_between(a, b, static_cast<std::size_t>(plan_.e[v]), [&](const Matrix& u) {
      tick();
      return visit(u);
    });
  }

  bool feasible_after(std::size_t v) const {
    for (auto a : q_.outgoing(v)) {
      const std::size_t t = q_.arrow(a).target;
      if (!is_set_[t] && static_cast<long>(lower(t).cols()) > plan_.e[t]) return false;
    }
    for (auto a : q_.incoming(v)) {
      const std::size_t s = q_.arrow(a).source;
      if (plan_.closed[s] && static_cast<long>(upper(s).cols()) < plan_.e[s]) return false;
    }
    return true;
  }

  void walk(std::size_t idx) {
    if (stop) return;
    if (idx == plan_.walked.size()) {
      closed_phase();
      return;
    }
    const std::size_t v = plan_.walked[idx];
    candidates(v, [&](const Matrix& u) {
      set(v, u);
      if (feasible_after(v)) walk(idx + 1);
      unset(v);
      return !stop;
    });
  }

  void closed_phase() {
    tick();
    std::vector<std::size_t> cl;
    std::vector<Matrix> lo, up;
    mpz_class product = 1;
    for (std::size_t v = 0; v < q_.vertex_count(); ++v) {
      if (!plan_.closed[v]) continue;
      Matrix a = lower(v), b = upper(v);
      const long ea = plan_.e[v];
      if (static_cast<long>(a.cols()) > ea || static_cast<long>(b.cols()) < ea) return;
      if (a.cols() && !solve(b, a)) return;
      product *= gaussian_binomial(static_cast<long>(b.cols() - a.cols()), ea - static_cast<long>(a.cols()),
                                   rep_.field().order());
      cl.push_back(v);
      lo.push_back(std::move(a));
      up.push_back(std::move(b));
    }
    if (mode_ == Mode::Count) {
      total += product;
      return;
    }
    list_closed(cl, lo, up, 0);
  }

  void list_closed(const std::vector<std::size_t>& cl, const std::vector<Matrix>& lo, const std::vector<Matrix>& up,
                   std::size_t k) {
    if (stop) return;
    if (k == cl.size()) {
      found.push_back(chosen_);
      total += 1;
      if (mode_ == Mode::First) stop = true;
      return;
    }
    const std::size_t v = cl[k];
    for_each_subspace_between(lo[k], up[k], static_cast<std::size_t>(plan_.e[v]), [&](const Matrix& u) {
      chosen_[v] = u;
      list_closed(cl, lo, up, k + 1);
      return !stop;
    });
  }

  const Plan& plan_;
  const Representation& rep_;
  const Quiver& q_;
  Mode mode_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& visits_;
  std::vector<Matrix> chosen_;
  std::vector<bool> is_set_;
};

void check_input(const Representation& m, const DimVector& e) {
  if (!m.field().is_finite()) throw std::invalid_argument("Grassmannian enumeration needs a finite field");
  if (e.size() != m.quiver().vertex_count()) throw std::invalid_argument("dimension vector does not match quiver");
  if (!m.quiver().acyclic()) throw std::invalid_argument("Grassmannian walk needs an acyclic quiver");
}

SubspaceFamily from_plan(const Plan& plan, const Representation& m, SubspaceFamily s) {
  if (!plan.dual) return s;
  for (auto& u : s) u = annihilator(u);
  (void)m;
  return s;
}

struct Result {
  mpz_class total = 0;
  std::vector<SubspaceFamily> found;
};

Result run(const Representation& m, const DimVector& e, const GrassmannianConfig& config, Mode mode,
           bool parallel) {
  check_input(m, e);
  Result res;
  if (!fits_in(e, m.dims())) return res;
  const Plan plan = make_plan(m, e, config.allow_dual);
  std::atomic<std::uint64_t> visits{0};
  if (plan.walked.empty()) {
    Walker w(plan, mode, config.budget, visits);
    w.run_from(nullptr);
    res.total = w.total;
    for (auto& s : w.found) res.found.push_back(from_plan(plan, m, std::move(s)));
    return res;
  }
  Walker root(plan, mode, config.budget, visits);
  const std::vector<Matrix> first = root.first_choices();
  std::vector<mpz_class> totals(first.size());
  std::vector<std::vector<SubspaceFamily>> lists(first.size());
  std::atomic<std::size_t> first_hit{first.size()};
  bool failed = false;
  std::string message;
  mpz_class estimate;

  auto body = [&](std::size_t k) {
    if (mode == Mode::First && first_hit.load() < k) return;
    Walker w(plan, mode, config.budget, visits);
    w.run_from(&first[k]);
    totals[k] = w.total;
    lists[k] = std::move(w.found);
    if (mode == Mode::First && !lists[k].empty()) {
      std::size_t cur = first_hit.load();
      while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < first.size(); ++k) {
      try {
        body(k);
      } catch (const BudgetExceeded& ex) {
#pragma omp critical
        {
          failed = true;
          message = ex.what();
          estimate = ex.estimate;
        }
      }
    }
    if (failed) throw BudgetExceeded(message, estimate);
  } else {
    for (std::size_t k = 0; k < first.size(); ++k) {
      body(k);
      if (mode == Mode::First && !lists[k].empty()) break;
    }
  }

  for (std::size_t k = 0; k < first.size(); ++k) {
    res.total += totals[k];
    for (auto& s : lists[k]) res.found.push_back(from_plan(plan, m, std::move(s)));
    if (mode == Mode::First && !res.found.empty()) break;
  }
  return res;
}

}  // namespace

std::vector<SubspaceFamily> enumerate(const Representation& m, const DimVector& e, const GrassmannianConfig& config) {
  return run(m, e, config, Mode::List, true).found;
}

mpz_class count(const Representation& m, const DimVector& e, const GrassmannianConfig& config) {
  return run(m, e, config, Mode::Count, true).total;
}

mpz_class count_serial(const Representation& m, const DimVector& e, const GrassmannianConfig& config) {
  return run(m, e, config, Mode::Count, false).total;
}

std::optional<SubspaceFamily> find_subrep(const Representation& m, const DimVector& e,
                                          const GrassmannianConfig& config) {
  auto res = run(m, e, config, Mode::First, false);
  if (res.found.empty()) return std::nullopt;
  return std::move(res.found.front());
}

bool nonempty(const Representation& m, const DimVector& e, const GrassmannianConfig& config) {
  return find_subrep(m, e, config).has_value();
}

mpz_class count_codimension(const Representation& m, const DimVector& e, const GrassmannianConfig& config) {
  return count(dual(m), e, config);
}

mpz_class enumeration_estimate(const Representation& m, const DimVector& e, bool allow_dual) {
  check_input(m, e);
  if (!fits_in(e, m.dims())) return 0;
  return make_plan(m, e, allow_dual).estimate;
}

long Polynomial::degree() const {
  for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

mpz_class Polynomial::leading() const {
  const long d = degree();
  return d < 0 ? mpz_class(0) : coeffs[d];
}

mpz_class Polynomial::operator()(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

std::optional<Polynomial> fit_polynomial(const std::vector<std::pair<std::uint32_t, mpz_class>>& samples,
                                         long degree_cap) {
  const long n = static_cast<long>(samples.size());
  for (long d = 0; d <= degree_cap && d + 2 <= n; ++d) {
    // Newton interpolation through the first d+1 samples.
    std::vector<mpq_class> xs, coef;
    for (long i = 0; i <= d; ++i) {
      xs.emplace_back(samples[i].first);
      coef.emplace_back(samples[i].second);
    }
    for (long j = 1; j <= d; ++j)
      for (long i = d; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    // Expand to monomial coefficients.
    std::vector<mpq_class> mono(d + 1, 0);
    for (long i = d; i >= 0; --i) {
      // mono = mono * (x - xs[i]) + coef[i]
      std::vector<mpq_class> next(d + 1, 0);
      for (long k = 0; k <= d; ++k) {
        if (k + 1 <= d) next[k + 1] += mono[k];
        next[k] -= mono[k] * xs[i];
      }
      next[0] += coef[i];
      mono = std::move(next);
    }
    Polynomial p;
    bool integral = true;
    for (auto& c : mono) {
      c.canonicalize();
      if (c.get_den() != 1) integral = false;
      p.coeffs.push_back(c.get_num());
    }
    if (!integral) continue;
    bool all = true;
    for (const auto& [q, c] : samples)
      if (p(mpz_class(q)) != c) all = false;
    if (all) return p;
  }
  return std::nullopt;
}

GrassmannianCount counting_poly(const Representation& m_over_q, const DimVector& e,
                                const std::vector<std::uint32_t>& qs, const GrassmannianConfig& config) {
  if (!m_over_q.field().is_rational()) throw std::invalid_argument("counting_poly expects a representation over Q");
  GrassmannianCount out{e, {}, std::nullopt, {}};
  const std::size_t end_q = hom_dim(m_over_q, m_over_q);
  std::vector<std::uint32_t> sorted = qs;
  std::sort(sorted.begin(), sorted.end());
  for (auto q : sorted) {
    const Field f = Field::finite(q);
    const Representation mq = m_over_q.reduced_to(f);
    if (hom_dim(mq, mq) != end_q)
      throw std::invalid_argument("reduction to " + f.name() + " changes dim End from " + std::to_string(end_q) +
                                  " to " + std::to_string(hom_dim(mq, mq)));
    out.samples.emplace_back(q, count(mq, e, config));
  }
  out.poly = fit_polynomial(out.samples, m_over_q.dims().total());
  if (!out.poly)
    out.failure = "no polynomial of degree <= " + std::to_string(static_cast<long>(out.samples.size()) - 2) +
                  " matches all " + std::to_string(out.samples.size()) + " samples";
  return out;
}

std::string to_csv(const GrassmannianCount& c) {
  std::ostringstream os;
  os << "q,count\n";
  for (const auto& [q, n] : c.samples) os << q << "," << n.get_str() << "\n";
  os << "# e=" << c.e.to_string() << " poly=" << (c.poly ? c.poly->to_string() : "none") << "\n";
  return os.str();
}

}  // namespace quivemb
