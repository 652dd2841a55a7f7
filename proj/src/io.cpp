#include "quivemb/io.hpp"

#include <fstream>
#include <sstream>

namespace quivemb::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::size_t vertex_ref(const json& j, const Quiver& q) {
  if (j.is_string()) {
    if (auto v = q.index_of(j.get<std::string>())) return *v;
    throw InputError("unknown vertex label " + j.get<std::string>());
  }
  const auto v = j.get<std::size_t>();
  if (v >= q.vertex_count()) throw InputError("vertex index out of range");
  return v;
}

json dims_json(const DimVector& d) { return d.coords(); }

json family_json(const SubspaceFamily& s) {
  json out = json::array();
  for (const auto& m : s) out.push_back(to_json(m));
  return out;
}

json inequality_json(const Inequality& i) {
  return {{"label", i.label}, {"lhs", i.lhs}, {"relation", i.relation}, {"rhs", i.rhs}, {"holds", i.holds()}};
}

json brackets_json(const long (&b)[4]) { return json::array({b[0], b[1], b[2], b[3]}); }

json column_json(const Matrix& v) {
  json out = json::array();
  for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(to_json(v.at(r, 0)));
  return out;
}

struct WitnessJson {
  const Quiver& q;
  json operator()(const std::monostate&) const { return nullptr; }
  json operator()(const IndecomposableWitness& w) const {
    return {{"type", "indecomposable"}, {"family", w.family}, {"root", dims_json(w.root)},
            {"inequality", inequality_json(w.inequality)}};
  }
  json operator()(const QuotientWitness& w) const {
    return {{"type", "quotient"}, {"vertex", q.label(w.vertex)}, {"k", w.k}, {"vector", column_json(w.vector)},
            {"brackets", brackets_json(w.brackets)}};
  }
  json operator()(const SurjectionWitness& w) const {
    return {{"type", "surjection"}, {"u", to_json(w.u)}, {"kernel", family_json(w.kernel)},
            {"brackets", brackets_json(w.brackets)}};
  }
  json operator()(const TopWitness& w) const {
    return {{"type", "top"}, {"vertex", q.label(w.vertex)}, {"k", w.k}, {"functional", to_json(w.functional)},
            {"brackets", brackets_json(w.brackets)}};
  }
  json operator()(const DimensionWitness& w) const {
    return {{"type", "dimension"}, {"e", dims_json(w.e)}, {"d", dims_json(w.d)}};
  }
  json operator()(const SubspaceWitness& w) const {
    return {{"type", "subspace"}, {"basis", to_json(w.basis)}, {"dim_u", w.dim_u}, {"dim_zu", w.dim_zu}};
  }
  json operator()(const SubrepWitness& w) const {
    return {{"type", "subrepresentation"}, {"dims", dims_json(w.dims)}, {"value", w.value},
            {"basis", family_json(w.basis)}};
  }
};

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return guarded(path.c_str(), [&] { return json::parse(in); });
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({q.label(a.source), q.label(a.target)});
  return {{"vertices", q.labels()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  return guarded("quiver", [&] {
    const auto labels = j.at("vertices").get<std::vector<std::string>>();
    const Quiver bare(labels.size(), {}, labels);
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw InputError("arrow must be a [source, target] pair");
      arrows.push_back({vertex_ref(a[0], bare), vertex_ref(a[1], bare)});
    }
    return Quiver(labels.size(), arrows, labels);
  });
}

json to_json(const Scalar& s) {
  if (!s.is_rational()) return s.residue();
  const mpq_class& v = s.rational();
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

Scalar scalar_from_json(const json& j, const Field& f) {
  return guarded("matrix entry", [&] {
    if (j.is_number_integer()) {
      const long long n = j.get<long long>();
      // Non-prime fields store element codes; prime fields and Q take integers.
      if (f.is_finite() && !f.is_prime_field()) {
        if (n < 0 || n >= static_cast<long long>(f.order()))
          throw InputError("element code " + std::to_string(n) + " outside " + f.name());
        return Scalar(static_cast<std::uint32_t>(n));
      }
      return Scalar::from_int(f, n);
    }
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw InputError("matrix entries must be integers or \"p/q\" strings");
  });
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw InputError("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw InputError("expected " + std::to_string(cols) + " entries in row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(j[r][c], f));
  }
  return m;
}

DimVector dims_from_json(const json& j, std::size_t n) {
  return guarded("dimension vector", [&] {
    auto d = j.get<std::vector<long>>();
    if (d.size() != n) throw InputError("dimension vector has " + std::to_string(d.size()) + " entries, expected " +
                                        std::to_string(n));
    return DimVector(d);
  });
}

DimVector parse_dims(const std::string& text, std::size_t n) {
  std::vector<long> d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      d.push_back(std::stol(part, &used));
      if (used != part.size()) throw InputError("bad dimension entry '" + part + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad dimension entry '" + part + "'");
    }
  }
  if (d.size() != n)
    throw InputError("dimension vector has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n));
  return guarded("dimension vector", [&] { return DimVector(d); });
}

json to_json(const Representation& x) {
  json mats = json::array();
  for (const auto& m : x.arrow_mats()) mats.push_back(to_json(m));
  return {{"quiver", to_json(x.quiver())}, {"field", x.field().name()}, {"dims", dims_json(x.dims())},
          {"matrices", mats}};
}

Representation rep_from_json(const json& j) {
  return guarded("representation", [&] {
    const Quiver q = quiver_from_json(j.at("quiver"));
    const Field f = Field::parse(j.at("field").get<std::string>());
    const DimVector d = dims_from_json(j.at("dims"), q.vertex_count());
    const json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != q.arrow_count())
      throw InputError("expected one matrix per arrow (" + std::to_string(q.arrow_count()) + ")");
    std::vector<Matrix> ms;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      ms.push_back(matrix_from_json(mats[a], f, d[q.arrow(a).target], d[q.arrow(a).source]));
    return Representation(q, f, d, ms);
  });
}

json to_json(const Morphism& f) {
  json mats = json::array();
  for (const auto& m : f.vertex_mats()) mats.push_back(to_json(m));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrices", mats}};
}

Morphism morphism_from_json(const json& j) {
  return guarded("morphism", [&] {
    const Representation x = rep_from_json(j.at("source"));
    const Representation y = rep_from_json(j.at("target"));
    const json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != x.quiver().vertex_count())
      throw InputError("expected one matrix per vertex");
    std::vector<Matrix> ms;
    for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v)
      ms.push_back(matrix_from_json(mats[v], x.field(), y.dim(v), x.dim(v)));
    return Morphism(x, y, ms);
  });
}

json to_json(const Verdict& v, const Quiver& q) {
  json ledger = json::array();
  for (const auto& i : v.ledger) ledger.push_back(inequality_json(i));
  json out = {{"criterion", v.criterion}, {"holds", v.holds},       {"field", v.field},
              {"witness", std::visit(WitnessJson{q}, v.witness)}, {"ledger", ledger}, {"notes", v.notes}};
  if (v.dimension) out["dimension"] = *v.dimension;
  if (v.embedding) {
    json mats = json::array();
    for (const auto& m : v.embedding->vertex_mats()) mats.push_back(to_json(m));
    out["embedding"] = mats;
  }
  return out;
}

json to_json(const StableSearchReport& r) {
  json out = {{"found", r.found}, {"r", r.r}, {"trials_used", r.trials_used}, {"seed", r.seed}};
  if (r.block) out["block_matrix"] = to_json(*r.block);
  if (r.embedding) {
    json mats = json::array();
    for (const auto& m : r.embedding->vertex_mats()) mats.push_back(to_json(m));
    out["block_matrix"] = mats;
  }
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json to_json(const GenericHomEstimate& g) {
  return {{"e", dims_json(g.e)},
          {"r", g.r},
          {"estimate", g.estimate},
          {"samples", g.samples},
          {"note", "minimum over samples: an upper bound for the generic value"}};
}

json to_json(const StabilizationReport& s) {
  json rows = json::array();
  for (const auto& r : s.rows) rows.push_back({{"r", r.r}, {"estimate", r.estimate}, {"target", r.target}});
  json out = {{"e", dims_json(s.e)},
              {"e_of_m", s.e_of_m},
              {"hypothesis", s.hypothesis_verified ? "verified" : "assumed"},
              {"rows", rows},
              {"samples", s.samples}};
  if (s.min_slope) out["min_slope"] = *s.min_slope;
  out["threshold"] = s.threshold ? json(*s.threshold) : json(nullptr);
  return out;
}

json to_json(const GrassmannianCount& c) {
  json samples = json::array();
  for (const auto& [q, n] : c.samples) samples.push_back({{"q", q}, {"count", n.get_str()}});
  json out = {{"e", dims_json(c.e)}, {"samples", samples}};
  if (c.poly) {
    json coeffs = json::array();
    for (const auto& k : c.poly->coeffs) coeffs.push_back(k.get_str());
    out["polynomial"] = c.poly->to_string();
    out["coefficients"] = coeffs;
    out["degree"] = c.poly->degree();
  } else {
    out["failure"] = c.failure;
  }
  return out;
}

json to_json(const IndecomposableTable& t) {
  json reps = json::array();
  for (const auto& r : t.reps) reps.push_back(to_json(r));
  json roots = json::array();
  for (const auto& r : t.roots) roots.push_back(dims_json(r));
  return {{"quiver", to_json(t.quiver)}, {"field", t.field.name()}, {"roots", roots}, {"reps", reps}, {"hom", t.hom}};
}

IndecomposableTable table_from_json(const json& j) {
  return guarded("table", [&] {
    const Quiver q = quiver_from_json(j.at("quiver"));
    const Field f = Field::parse(j.at("field").get<std::string>());
    std::vector<Representation> reps;
    for (const auto& r : j.at("reps")) reps.push_back(rep_from_json(r));
    try {
      IndecomposableTable t = IndecomposableTable::from_reps(q, f, std::move(reps));
      if (j.contains("hom") && j.at("hom").get<std::vector<std::vector<long>>>() != t.hom)
        throw InputError("stored Hom matrix disagrees with recomputation");
      return t;
    } catch (const std::runtime_error& e) {
      throw InputError(std::string("table: ") + e.what());
    }
  });
}

}  // namespace quivemb::io
