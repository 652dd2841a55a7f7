#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quivemb/criteria.hpp"
#include "quivemb/fixtures.hpp"
#include "quivemb/grassmannian.hpp"
#include "quivemb/io.hpp"
#include "quivemb/stable.hpp"

using namespace quivemb;
using io::json;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

struct RunConfig {
  std::uint64_t seed = 0;
  std::string field;  // empty: keep the input's field
  std::size_t r_max = 8;
  std::size_t trials = 256;
  std::size_t samples = 64;
  std::uint64_t enum_budget = 10'000'000;
  std::string output;
  std::string format = "text";
  bool ledger = false;

  json to_json() const {
    return {{"seed", seed},       {"field", field.empty() ? json(nullptr) : json(field)},
            {"r_max", r_max},     {"trials", trials},
            {"samples", samples}, {"enum_budget", enum_budget}};
  }
};

RunConfig cfg;

void emit(const json& report, const std::string& text) {
  std::ostringstream out;
  if (cfg.format == "json") {
    json full = report;
    full["config"] = cfg.to_json();
    out << full.dump(2) << '\n';
  } else {
    out << text;
  }
  if (cfg.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw io::InputError("cannot write " + cfg.output);
    f << out.str();
  }
}

Representation load_rep(const std::string& path) {
  Representation x = io::rep_from_json(io::read_file(path));
  if (!cfg.field.empty()) {
    const Field f = Field::parse(cfg.field);
    if (!(f == x.field())) {
      if (!x.field().is_rational()) throw io::InputError("only representations over Q can be reduced to " + cfg.field);
      x = x.reduced_to(f);
    }
  }
  return x;
}

IndecomposableTable table_for(const Representation& x) {
  if (!x.quiver().is_dynkin()) throw io::InputError("quiver " + x.quiver().dynkin_name() + " is not of Dynkin type");
  return IndecomposableTable::build(x.quiver(), x.field(), SamplingConfig{cfg.seed, 32});
}

std::string format_inequality(const Inequality& i) {
  std::ostringstream os;
  os << "  " << (i.holds() ? "ok   " : "FAIL ") << i.label << " : " << i.lhs << ' ' << i.relation << ' ' << i.rhs
     << '\n';
  return os.str();
}

std::string format_witness(const Verdict& v, const Quiver& q) {
  std::ostringstream os;
  if (auto* w = std::get_if<IndecomposableWitness>(&v.witness)) {
    os << "witness: U of dimension " << w->root.to_string() << " (" << w->family << ")\n"
       << format_inequality(w->inequality);
  } else if (auto* w = std::get_if<QuotientWitness>(&v.witness)) {
    os << "witness: quotient N^" << w->k << " -> N^" << w->k << "/S, S = S_" << q.label(w->vertex)
       << " spanned by " << w->vector.transpose().to_string() << '\n'
       << "  [U,N] = " << w->brackets[0] << ", [V,N] = " << w->brackets[1] << ", [U,M] = " << w->brackets[2]
       << ", [V,M] = " << w->brackets[3] << '\n';
  } else if (auto* w = std::get_if<SurjectionWitness>(&v.witness)) {
    os << "witness: surjection U -> V with dim U = " << w->u.dims().to_string() << '\n'
       << "  [U,N] = " << w->brackets[0] << ", [V,N] = " << w->brackets[1] << ", [U,M] = " << w->brackets[2]
       << ", [V,M] = " << w->brackets[3] << '\n';
  } else if (auto* w = std::get_if<TopWitness>(&v.witness)) {
    os << "witness: V^" << w->k << " -> S_" << q.label(w->vertex) << " given by " << w->functional.to_string()
       << '\n'
       << "  [V,V^k] = " << w->brackets[0] << ", [V,K] = " << w->brackets[1] << ", [U,V^k] = " << w->brackets[2]
       << ", [U,K] = " << w->brackets[3] << '\n';
  } else if (auto* w = std::get_if<DimensionWitness>(&v.witness)) {
    os << "witness: " << w->e.to_string() << " does not fit in " << w->d.to_string() << '\n';
  } else if (auto* w = std::get_if<SubrepWitness>(&v.witness)) {
    os << "witness: subrepresentation of dimension " << w->dims.to_string() << " with e(N) = " << w->value << '\n';
  } else if (auto* w = std::get_if<SubspaceWitness>(&v.witness)) {
    os << "witness: U with dim U = " << w->dim_u << " > dim Z(U) = " << w->dim_zu << '\n';
  }
  return os.str();
}

std::string format_verdict(const Verdict& v, const Quiver& q) {
  std::ostringstream os;
  os << v.criterion << " over " << v.field << ": " << (v.holds ? "holds" : "fails") << '\n';
  if (v.dimension) os << "dimension: " << *v.dimension << '\n';
  for (const auto& n : v.notes) os << "note: " << n << '\n';
  os << format_witness(v, q);
  std::size_t shown = 0;
  for (const auto& i : v.ledger)
    if (cfg.ledger || !i.holds()) {
      os << format_inequality(i);
      ++shown;
    }
  os << v.ledger.size() << " inequalities checked";
  if (!cfg.ledger && shown < v.ledger.size()) os << " (use --ledger to list all)";
  os << '\n';
  return os.str();
}

int verdict_exit(const Verdict& v) { return v.holds ? kPositive : kNegative; }

void add_e(CLI::App* sub, std::string& e) { sub->add_option("--e", e, "dimension vector, comma separated")->required(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical criteria for embeddings of quiver representations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--field", cfg.field, "reduce Q inputs to this field (F_p, F_4, ...)");
  app.add_option("--r-max,--rmax", cfg.r_max, "largest replication factor r")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random trials per r")->capture_default_str();
  app.add_option("--samples", cfg.samples, "samples for generic estimates")->capture_default_str();
  app.add_option("--enum-budget", cfg.enum_budget, "enumeration budget")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--ledger", cfg.ledger, "list every inequality in text output");

  std::string rep_a, rep_b, e_text, out_dir = ".", mode = "exhaustive", qs_text = "2,3,4,5,7", z_field;
  bool stable = false, list = false;
  std::uint32_t exhaustive_q = 0;
  std::size_t r_min = 1;

  auto* check_sub = app.add_subcommand("check-sub", "does M have a subrepresentation of dimension e");
  check_sub->add_option("rep", rep_a)->required();
  add_e(check_sub, e_text);
  auto* check_irred = app.add_subcommand("check-irred", "sufficient test for Gr_e(M) irreducible");
  check_irred->add_option("rep", rep_a)->required();
  add_e(check_irred, e_text);
  auto* check_embed = app.add_subcommand("check-embed", "(nc2) for N into M, optionally with a stable search");
  check_embed->add_option("n", rep_a)->required();
  check_embed->add_option("m", rep_b)->required();
  check_embed->add_flag("--stable", stable, "search for an injective N^r -> M^r");
  check_embed->add_option("--exhaustive-q", exhaustive_q, "reduce Q inputs to F_q for the exhaustive check");
  check_embed->add_option("--mode", mode, "exhaustive, raw or sampling")
      ->check(CLI::IsMember({"exhaustive", "raw", "sampling"}))
      ->capture_default_str();
  auto* enum_gr = app.add_subcommand("enum-gr", "count (or list) subrepresentations of dimension e");
  enum_gr->add_option("rep", rep_a)->required();
  add_e(enum_gr, e_text);
  enum_gr->add_flag("--list", list, "list the subrepresentations");
  auto* count_poly = app.add_subcommand("count-poly", "counting polynomial of Gr_e(M) for M over Q");
  count_poly->add_option("rep", rep_a)->required();
  add_e(count_poly, e_text);
  count_poly->add_option("--qs", qs_text, "field sizes")->capture_default_str();
  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y) with a basis");
  hom->add_option("x", rep_a)->required();
  hom->add_option("y", rep_b)->required();
  auto* ext = app.add_subcommand("ext", "dim Ext^1(X, Y)");
  ext->add_option("x", rep_a)->required();
  ext->add_option("y", rep_b)->required();
  auto* decomp = app.add_subcommand("decompose", "multiplicities of the indecomposable summands");
  decomp->add_option("rep", rep_a)->required();
  auto* roots = app.add_subcommand("roots", "positive roots of a Dynkin quiver");
  roots->add_option("quiver", rep_a, "quiver file (or a representation file)")->required();
  auto* semi = app.add_subcommand("semistable", "e-semistability and min e(N)");
  semi->add_option("rep", rep_a)->required();
  add_e(semi, e_text);
  auto* stab = app.add_subcommand("stabilize", "generic hom(M, r e) against r e(M)");
  stab->add_option("rep", rep_a)->required();
  add_e(stab, e_text);
  stab->add_option("--r-min", r_min, "smallest r")->capture_default_str();
  auto* fix = app.add_subcommand("fixtures", "write the Kronecker and D_4 example files");
  fix->add_option("--out", out_dir, "directory")->capture_default_str();
  fix->add_option("--fixture-field", z_field, "field of the written files (default Q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_sub || *check_irred) {
      const Representation m = load_rep(rep_a);
      const DimVector e = io::parse_dims(e_text, m.quiver().vertex_count());
      const auto t = table_for(m);
      Verdict v;
      if (*check_sub) {
        v = check_grassmannian_nonempty(m, e, t);
      } else {
        if (!fits_in(e, m.dims())) throw io::InputError(e.to_string() + " does not fit in " + m.dims().to_string());
        v = check_grassmannian_irreducible(m, e, t);
      }
      emit(io::to_json(v, m.quiver()), format_verdict(v, m.quiver()));
      // A failed sufficient test is no negative answer.
      if (*check_irred && !v.holds) return kInconclusive;
      return verdict_exit(v);
    }
    if (*check_embed) {
      Representation n = load_rep(rep_a), m = load_rep(rep_b);
      if (!(n.quiver() == m.quiver())) throw io::InputError("N and M live on different quivers");
      if (!(n.field() == m.field())) throw io::InputError("N and M live over different fields");
      Nc2Config nc{Nc2Mode::Exhaustive, cfg.samples, cfg.seed, cfg.enum_budget};
      if (mode == "raw") nc.mode = Nc2Mode::RawVectors;
      if (mode == "sampling") nc.mode = Nc2Mode::Sampling;
      Representation nv = n, mv = m;
      if (exhaustive_q) {
        if (!n.field().is_rational()) throw io::InputError("--exhaustive-q needs inputs over Q");
        nv = n.reduced_to(Field::finite(exhaustive_q));
        mv = m.reduced_to(Field::finite(exhaustive_q));
      } else if (n.field().is_rational() && nc.mode != Nc2Mode::Sampling) {
        nc.mode = Nc2Mode::Sampling;
      }
      const Verdict v = check_nc2(nv, mv, nc);
      json report = {{"nc2", io::to_json(v, n.quiver())}};
      std::string text = format_verdict(v, n.quiver());
      text += v.holds ? "criterion holds\n" : "criterion fails\n";
      int code = verdict_exit(v);
      if (stable) {
        const auto s = search_stable_embedding(n, m, cfg.r_max, cfg.trials, cfg.seed);
        report["stable"] = io::to_json(s);
        if (s.found) {
          text += "embedding found at r = " + std::to_string(s.r) + "\n";
        } else {
          text += "not found (inconclusive): " + s.reason + "\n";
          if (code == kPositive) code = kInconclusive;
        }
      }
      emit(report, text);
      return code;
    }
    if (*enum_gr) {
      const Representation m = load_rep(rep_a);
      const DimVector e = io::parse_dims(e_text, m.quiver().vertex_count());
      const GrassmannianConfig gc{cfg.enum_budget, true};
      json report = {{"e", e.coords()}, {"field", m.field().name()}};
      std::ostringstream text;
      if (list) {
        const auto subs = enumerate(m, e, gc);
        json all = json::array();
        for (const auto& s : subs) {
          json fam = json::array();
          for (const auto& b : s) fam.push_back(io::to_json(b));
          all.push_back(fam);
        }
        report["count"] = subs.size();
        report["subrepresentations"] = all;
        text << "|Gr_" << e.to_string() << "| over " << m.field().name() << " = " << subs.size() << '\n';
        for (std::size_t k = 0; k < subs.size(); ++k) {
          text << "#" << k;
          for (const auto& b : subs[k]) text << "  " << b.transpose().to_string();
          text << '\n';
        }
      } else {
        const mpz_class c = count(m, e, gc);
        report["count"] = c.get_str();
        text << "|Gr_" << e.to_string() << "| over " << m.field().name() << " = " << c.get_str() << '\n';
      }
      emit(report, text.str());
      return report["count"] == 0 || report["count"] == "0" ? kNegative : kPositive;
    }
    if (*count_poly) {
      const Representation m = load_rep(rep_a);
      const DimVector e = io::parse_dims(e_text, m.quiver().vertex_count());
      std::vector<std::uint32_t> qs;
      const DimVector qv =
          io::parse_dims(qs_text, static_cast<std::size_t>(std::count(qs_text.begin(), qs_text.end(), ',') + 1));
      for (long q : qv.coords()) qs.push_back(static_cast<std::uint32_t>(q));
      const auto c = counting_poly(m, e, qs, GrassmannianConfig{cfg.enum_budget, true});
      std::string text = to_csv(c);
      emit(io::to_json(c), text);
      return c.poly ? kPositive : kInconclusive;
    }
    if (*hom || *ext) {
      const Representation x = load_rep(rep_a), y = load_rep(rep_b);
      if (!(x.quiver() == y.quiver()) || !(x.field() == y.field()))
        throw io::InputError("X and Y live on different quivers or fields");
      if (*hom) {
        const HomBasis hb = hom_basis(x, y);
        json basis = json::array();
        for (const auto& f : hb.morphisms) {
          json mats = json::array();
          for (const auto& m : f.vertex_mats()) mats.push_back(io::to_json(m));
          basis.push_back(mats);
        }
        emit({{"hom", hb.dim()}, {"basis", basis}}, "[X,Y] = " + std::to_string(hb.dim()) + "\n");
      } else {
        const long e1 = ext_dim(x, y), e2 = ext_dim_via_resolution(x, y);
        if (e1 != e2) throw std::logic_error("Ext computations disagree");
        emit({{"ext", e1}, {"hom", hom_dim(x, y)}, {"euler", euler_form(x.quiver(), x.dims(), y.dims())}},
             "dim Ext^1(X,Y) = " + std::to_string(e1) + "  ([X,Y] = " + std::to_string(hom_dim(x, y)) +
                 ", <dim X,dim Y> = " + std::to_string(euler_form(x.quiver(), x.dims(), y.dims())) + ")\n");
      }
      return kPositive;
    }
    if (*decomp) {
      const Representation x = load_rep(rep_a);
      const auto t = table_for(x);
      const auto mult = decompose(x, t);
      json parts = json::array();
      std::ostringstream text;
      for (std::size_t u = 0; u < t.size(); ++u) {
        if (!mult[u]) continue;
        parts.push_back({{"root", t.roots[u].coords()}, {"multiplicity", mult[u]}});
        text << "U" << t.roots[u].to_string() << " ^ " << mult[u] << '\n';
      }
      emit({{"summands", parts}}, text.str());
      return kPositive;
    }
    if (*roots) {
      const json j = io::read_file(rep_a);
      const Quiver q = io::quiver_from_json(j.contains("quiver") ? j.at("quiver") : j);
      if (!q.is_dynkin()) throw io::InputError("quiver " + q.dynkin_name() + " is not of Dynkin type");
      json all = json::array();
      std::ostringstream text;
      text << q.dynkin_name() << ", " << positive_roots(q).size() << " positive roots\n";
      for (const auto& r : positive_roots(q)) {
        all.push_back(r.coords());
        text << r.to_string() << '\n';
      }
      emit({{"type", q.dynkin_name()}, {"roots", all}}, text.str());
      return kPositive;
    }
    if (*semi) {
      const Representation m = load_rep(rep_a);
      const DimVector e = io::parse_dims(e_text, m.quiver().vertex_count());
      std::optional<IndecomposableTable> t;
      if (!m.field().is_finite()) t = table_for(m);
      const Verdict v = is_semistable(m, e, t ? &*t : nullptr);
      emit(io::to_json(v, m.quiver()),
           format_verdict(v, m.quiver()) + "min e(N) = " + std::to_string(*v.dimension) + "\n");
      return verdict_exit(v);
    }
    if (*stab) {
      const Representation m = load_rep(rep_a);
      const DimVector e = io::parse_dims(e_text, m.quiver().vertex_count());
      std::optional<IndecomposableTable> t;
      if (!m.field().is_finite() && m.quiver().is_dynkin()) t = table_for(m);
      StabilizationReport s;
      try {
        s = check_stabilization(m, e, r_min, cfg.r_max, cfg.samples, cfg.seed, t ? &*t : nullptr);
      } catch (const std::domain_error& err) {
        emit({{"refused", err.what()}}, std::string("refused: ") + err.what() + "\n");
        return kNegative;
      }
      std::ostringstream text;
      text << "e(M) = " << s.e_of_m << ", hypothesis " << (s.hypothesis_verified ? "verified" : "assumed") << '\n';
      for (const auto& r : s.rows)
        text << "r = " << r.r << ": hom estimate " << r.estimate << ", r e(M) = " << r.target << '\n';
      text << "estimates are upper bounds from " << s.samples << " samples\n";
      if (s.threshold)
        text << "equality from r = " << *s.threshold << '\n';
      else
        text << "no stabilization observed (inconclusive)\n";
      emit(io::to_json(s), text.str());
      return s.threshold ? kPositive : kInconclusive;
    }
    if (*fix) {
      const Field f = z_field.empty() ? Field::rationals() : Field::parse(z_field);
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      io::write_file((dir / "kronecker3.m.json").string(), io::to_json(fixtures::kronecker_m(f)));
      io::write_file((dir / "kronecker3.pi.json").string(), io::to_json(fixtures::kronecker_pi(f)));
      io::write_file((dir / "kronecker3.g.json").string(), io::to_json(fixtures::kronecker_g(f)));
      io::write_file((dir / "d4.p1.json").string(), io::to_json(fixtures::d4_p1(f)));
      io::write_file((dir / "d4.x.json").string(), io::to_json(fixtures::d4_x(f)));
      std::cout << "wrote kronecker3.{m,pi,g}.json and d4.{p1,x}.json to " << out_dir << '\n';
      return kPositive;
    }
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "enumeration budget exceeded (estimate " << e.estimate.get_str() << "): " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::length_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kInconclusive;
  }
  return kInputError;
}
