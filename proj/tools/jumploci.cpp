#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumploci/jumploci.hpp"

namespace {

using namespace jumploci;
using io::Json;

constexpr const char* kVersion = "0.1.0";

struct Context {
  std::uint64_t seed = 0;
  std::uint32_t prime = ModP::default_prime;
  std::size_t trials = 100;
  std::string json_out;
  std::uint64_t digest = io::fnv1a("");
  Json checks = Json::array();

  Json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    digest = io::fnv1a(text, digest);
    return io::parse_text(text, path);
  }
  void note(const std::string& arg) { digest = io::fnv1a(arg + '\0', digest); }
  void check(const std::string& name, bool passed, Json value = nullptr) {
    Json c{{"name", name}, {"passed", passed}};
    if (!value.is_null()) c["value"] = std::move(value);
    checks.push_back(std::move(c));
  }
};

Json real_root_json(const RealRoot& r) {
  if (r.exact) return Json{{"exact", r.exact->str()}};
  return Json{{"interval", {r.lo.str(), r.hi.str()}}};
}

Json divisor_json(const DivisorReport& r) {
  Json zeros = Json::array();
  for (const auto& z : r.zeros) {
    Json e{{"site", site_name(z.site)},
           {"factor", io::to_json(z.factor.coeffs())},
           {"count", z.count},
           {"multiplicity", z.multiplicity}};
    if (z.boundary_index) e["boundary_index"] = *z.boundary_index;
    if (z.real) e["location"] = real_root_json(*z.real);
    if (z.point) e["point"] = {z.point->first.str(), z.point->second.str()};
    zeros.push_back(std::move(e));
  }
  Json out{{"zeros", zeros},
           {"interior_degree", r.interior_degree},
           {"boundary_degree", r.boundary_degree},
           {"total_degree", r.total_degree},
           {"euler", r.euler},
           {"expected", r.expected},
           {"numerator", io::to_json(r.numerator.coeffs())}};
  if (r.shear) out["eliminant_variable"] = "x + (" + r.shear->str() + ") y";
  return out;
}

Json run_os_algebra(Context& ctx, const std::string& file, std::optional<std::size_t> top) {
  auto arr = io::parse_arrangement(ctx.load(file));
  auto os = os_algebra(arr, top);
  Json r{{"hyperplanes", arr.size()},
         {"rank", os.matroid_rank},
         {"truncated", os.truncated},
         {"poincare", os.poincare},
         {"circuits", matroid_circuits(arr).size()},
         {"inconsistent_sets", minimal_inconsistent_sets(arr).size()}};
  if (!os.truncated) {
    r["euler"] = poincare_and_euler(os).euler;
    ctx.check("poincare_matches_broken_circuits",
              os.poincare == broken_circuit_poincare(arr));
  }
  return r;
}

std::vector<Rational> csv(Context& ctx, const std::string& text) {
  ctx.note(text);
  return io::parse_rational_csv(text);
}

Json run_aomoto(Context& ctx, const std::string& file, const std::string& alpha_text,
                std::size_t degree, std::size_t depth) {
  auto os = os_algebra(io::parse_arrangement(ctx.load(file)));
  auto alpha = csv(ctx, alpha_text);
  auto r = resonance_membership(os.algebra, alpha, degree, depth);
  ctx.check("composition_zero", true);
  ctx.check("euler_invariance", r.euler == algebra_euler(os.algebra), r.euler);
  return Json{{"h", r.h}, {"degree", degree}, {"depth", depth}, {"member", r.member}};
}

Json run_resonance_sample(Context& ctx, const std::string& file) {
  auto arr = io::parse_arrangement(ctx.load(file));
  const ModP zero(0, ctx.prime);
  auto os = os_algebra<ModP>(arr, std::nullopt, zero);
  std::vector<Vector<ModP>> basis;
  for (std::size_t i = 0; i < os.algebra.dim(1); ++i) {
    Vector<ModP> v(os.algebra.dim(1), zero);
    v[i] = ModP(1, ctx.prime);
    basis.push_back(v);
  }
  std::mt19937_64 rng(ctx.seed);
  auto g = generic_dims_sample(os.algebra, basis, ctx.trials, rng);
  return Json{{"prime", ctx.prime},
              {"trials", g.trials},
              {"generic", g.generic},
              {"exceedances", g.exceedances}};
}

Json run_log_resonance(Context& ctx, const std::string& file, const std::string& alpha_text) {
  auto os = os_algebra(io::parse_arrangement(ctx.load(file)));
  auto r = log_resonance_membership(os.algebra, csv(ctx, alpha_text));
  auto h = cohomology_dims(aomoto_complex(os.algebra, io::parse_rational_csv(alpha_text)));
  ctx.check("log_resonance_inside_resonance", !r.member || h.h[1] >= 1);
  return Json{{"member", r.member}, {"h1", r.h1}, {"zero_alpha", r.zero_alpha}};
}

Json run_elliptic(Context& ctx, std::size_t n) {
  ctx.note(std::to_string(n));
  EllipticModel m(n, 3);
  std::mt19937_64 rng(ctx.seed);
  acceptance::EllipticSampleSizes sizes{2 * ctx.trials, ctx.trials,
                                        std::max<std::size_t>(1, ctx.trials / 4)};
  for (const auto& v : acceptance::elliptic_checks(n, rng, sizes))
    ctx.check(v.name, v.passed, v.detail);
  return Json{{"points", n},
              {"dims", m.algebra().dims()},
              {"diagonal_classes", m.diagonal_classes().size()}};
}

GaussVector gauss_vector(const std::vector<Rational>& v) {
  GaussVector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Json run_e2_page(Context& ctx, std::size_t n, const std::string& x_text) {
  ctx.note(std::to_string(n));
  auto x = gauss_vector(csv(ctx, x_text));
  EllipticModel m(n, 3);
  if (x.size() != n) throw PreconditionError("need " + std::to_string(n) + " coordinates");
  auto page = elliptic_e2_page(m, x);
  Json entries = Json::array();
  for (std::size_t total = 0; total < page.gr.size(); ++total)
    for (std::size_t p = 0; p <= total; ++p)
      entries.push_back(Json{{"p", p}, {"q", total - p}, {"dim", page.at(p, total - p)}});
  auto h = cohomology_dims(aomoto_complex(m.algebra(), m.holomorphic(x)));
  ctx.check("graded_pieces_sum_to_h1", page.at(1, 0) + page.at(0, 1) == h.h[1], h.h[1]);
  return Json{{"entries", entries}, {"h", page.h}};
}

Json run_etc(Context& ctx, const std::string& file, const std::string& alpha_text) {
  auto sys = io::parse_laurent_system(ctx.load(file));
  auto alpha = csv(ctx, alpha_text);
  bool member = etc_membership(sys, alpha);
  Json eqs = Json::array();
  for (const auto& p : sys.equations) {
    auto e = along_direction(p, alpha);
    Json freq = Json::array();
    for (const auto& [mu, c] : e.terms())
      freq.push_back(Json{{"frequency", mu.str()}, {"coeff", c.str()}});
    Json entry{{"vanishes", e.identically_zero()}, {"grouped", freq}};
    if (!p.is_zero() && p.at_identity().is_zero()) {
      auto cone = tangent_cone_hypersurface(p);
      entry["tangent_cone"] = io::to_json(cone);
      if (member) {
        Rational v(0);
        for (const auto& [ex, c] : cone.terms()) {
          Rational term = c;
          for (std::size_t j = 0; j < ex.size(); ++j)
            for (long k = 0; k < ex[j]; ++k) term *= alpha[j];
          v += term;
        }
        ctx.check("direction_in_tangent_cone", v.is_zero());
      }
    }
    eqs.push_back(std::move(entry));
  }
  return Json{{"member", member}, {"equations", eqs}};
}

Json run_master(Context& ctx, const std::string& points, const std::string& file,
                const std::string& lambda_text) {
  auto lambda = csv(ctx, lambda_text);
  if (!points.empty()) {
    auto pts = csv(ctx, points);
    auto r = log_zero_divisor_p1(pts, lambda);
    Json out = divisor_json(r);
    Json koszul = Json::array();
    bool vanishing = true;
    for (const auto& k : local_koszul(pts, r)) {
      koszul.push_back(Json{{"zero", k.zero_index}, {"h0", k.h0}, {"h1", k.h1}});
      vanishing = vanishing && k.h0 == 0 && k.h1 == r.zeros[k.zero_index].multiplicity;
    }
    out["local_koszul"] = koszul;
    ctx.check("degree_on_p1", r.total_degree == pts.size() - 1, r.total_degree);
    ctx.check("local_koszul_vanishing", vanishing);
    return out;
  }
  auto arr = io::parse_arrangement(ctx.load(file));
  auto r = critical_points_bivariate(arr, lambda, ctx.seed);
  ctx.check("count_matches_euler", r.matches_euler, r.total_degree);
  return divisor_json(r);
}

Json run_residues(Context& ctx, const std::string& file, const std::string& lambda_text) {
  auto arr = io::parse_arrangement(ctx.load(file));
  Json entries = Json::array();
  for (const auto& e : residues_line_arrangement(arr, csv(ctx, lambda_text)))
    entries.push_back(Json{{"kind", e.exceptional ? "point" : "line"},
                           {"hyperplanes", e.lines},
                           {"residue", e.residue.str()},
                           {"zero", e.zero()}});
  return Json{{"entries", entries}};
}

template <Field F>
Json fox_report(Context& ctx, const Presentation& p, std::vector<F> values) {
  Character<F> chi(std::move(values));
  auto jac = fox_jacobian(p, chi);
  Json rows = Json::array();
  for (std::size_t r = 0; r < jac.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < jac.cols(); ++c) row.push_back(io::to_json(jac(r, c)));
    rows.push_back(row);
  }
  auto h = twisted_cohomology(p, chi);
  long lhs = static_cast<long>(h.h0) - static_cast<long>(h.h1) +
             static_cast<long>(h.h2_presentation);
  long rhs = 1 - static_cast<long>(p.generators()) + static_cast<long>(p.relators().size());
  ctx.check("euler_identity", lhs == rhs, lhs);
  return Json{{"jacobian", rows},
              {"h0", h.h0},
              {"h1", h.h1},
              {"h2_presentation", h.h2_presentation}};
}

// Characters are comma separated rationals or a JSON array of scalars, where
// Gaussian values are {"re": ..., "im": ...}.
Json run_fox(Context& ctx, const std::string& file, const std::string& character) {
  auto p = io::parse_presentation(ctx.load(file));
  if (!character.empty() && character.front() == '[') {
    ctx.note(character);
    Json arr = io::parse_text(character, "--character");
    std::vector<GaussianRational> values;
    bool real = true;
    for (std::size_t i = 0; i < io::detail::array(arr, "$").size(); ++i) {
      values.push_back(io::parse_gaussian(arr[i], "$[" + std::to_string(i) + "]"));
      real = real && values.back().im().is_zero();
    }
    if (!real) return fox_report(ctx, p, values);
    std::vector<Rational> re;
    for (const auto& v : values) re.push_back(v.re());
    return fox_report(ctx, p, re);
  }
  return fox_report(ctx, p, csv(ctx, character));
}

int run_verify(Context& ctx, Json& report) {
  acceptance::Options opt{ctx.seed, ctx.prime, ctx.trials};
  auto results = acceptance::run_all(opt);
  bool all = true;
  for (const auto& c : results) {
    std::cout << acceptance::format_line(c) << "\n";
    ctx.check("criterion_" + std::to_string(c.id), c.passed,
              Json{{"title", c.title}, {"detail", c.detail}});
    report["timing"]["criterion_" + std::to_string(c.id)] = c.seconds;
    all = all && c.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology jumping loci of arrangements and configuration spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--seed", ctx.seed, "random seed")->capture_default_str();
  app.add_option("--prime", ctx.prime, "prime for modular sampling")->capture_default_str();
  app.add_option("--trials", ctx.trials, "number of random trials")->capture_default_str();
  app.add_option("--json-out", ctx.json_out, "also write the JSON report here");

  std::string arrangement, alpha, lambda, points, system, presentation, character, x;
  std::size_t degree = 1, depth = 1, n = 3;
  std::optional<std::size_t> top;

  auto* os_cmd = app.add_subcommand("os-algebra", "Orlik-Solomon algebra and Poincare polynomial");
  os_cmd->add_option("--arrangement", arrangement)->required();
  os_cmd->add_option("--top", top, "truncate above this degree");

  auto* ao = app.add_subcommand("aomoto", "cohomology of the Aomoto complex at alpha");
  ao->add_option("--arrangement", arrangement)->required();
  ao->add_option("--alpha", alpha, "comma separated rationals")->required();
  ao->add_option("--degree", degree)->capture_default_str();
  ao->add_option("--depth", depth)->capture_default_str();

  auto* rs = app.add_subcommand("resonance-sample", "generic Aomoto dimensions over F_p");
  rs->add_option("--arrangement", arrangement)->required();

  auto* lr = app.add_subcommand("log-resonance", "first logarithmic resonance membership");
  lr->add_option("--arrangement", arrangement)->required();
  lr->add_option("--alpha", alpha)->required();

  auto* el = app.add_subcommand("elliptic", "checks on n points of an elliptic curve");
  el->add_option("--n", n)->capture_default_str();

  auto* e2 = app.add_subcommand("e2-page", "E2 page at the holomorphic class (x, i x)");
  e2->add_option("--n", n)->capture_default_str();
  e2->add_option("--x", x, "comma separated rationals")->required();

  auto* etc = app.add_subcommand("etc-membership", "exponential tangent cone membership");
  etc->add_option("--system", system)->required();
  etc->add_option("--alpha", alpha)->required();

  auto* ms = app.add_subcommand("master", "zeros of a logarithmic 1-form");
  auto* pts_opt = ms->add_option("--points", points, "points on the line");
  auto* arr_opt = ms->add_option("--arrangement", arrangement, "affine line arrangement");
  pts_opt->excludes(arr_opt);
  ms->add_option("--lambda", lambda)->required();

  auto* rsd = app.add_subcommand("residues", "residues on the blown-up line arrangement");
  rsd->add_option("--arrangement", arrangement)->required();
  rsd->add_option("--lambda", lambda)->required();

  auto* fox = app.add_subcommand("fox-h1", "twisted cohomology via Fox calculus");
  fox->add_option("--presentation", presentation)->required();
  fox->add_option("--character", character)->required();

  app.add_subcommand("verify-paper", "run the acceptance suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  ctx.note(name);
  ctx.note(std::to_string(ctx.seed) + ":" + std::to_string(ctx.prime) + ":" +
           std::to_string(ctx.trials));
  Json report{{"tool", "jumploci"}, {"version", kVersion}, {"subcommand", name}};
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    Json result;
    if (name == "os-algebra") result = run_os_algebra(ctx, arrangement, top);
    else if (name == "aomoto") result = run_aomoto(ctx, arrangement, alpha, degree, depth);
    else if (name == "resonance-sample") result = run_resonance_sample(ctx, arrangement);
    else if (name == "log-resonance") result = run_log_resonance(ctx, arrangement, alpha);
    else if (name == "elliptic") result = run_elliptic(ctx, n);
    else if (name == "e2-page") result = run_e2_page(ctx, n, x);
    else if (name == "etc-membership") result = run_etc(ctx, system, alpha);
    else if (name == "master") {
      if (points.empty() && arrangement.empty())
        throw PreconditionError("master needs --points or --arrangement");
      result = run_master(ctx, points, arrangement, lambda);
    } else if (name == "residues") result = run_residues(ctx, arrangement, lambda);
    else if (name == "fox-h1") result = run_fox(ctx, presentation, character);
    else if (name == "verify-paper") status = run_verify(ctx, report);
    if (!result.is_null()) report["result"] = std::move(result);
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  report["input_digest"] = "fnv1a:" + io::hex(ctx.digest);
  report["seed"] = ctx.seed;
  report["checks"] = ctx.checks;
  report["timing"]["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.dump(2);
  if (name != "verify-paper") std::cout << text << "\n";
  if (!ctx.json_out.empty()) {
    std::ofstream out(ctx.json_out);
    if (!out) {
      std::cerr << "error: cannot write " << ctx.json_out << "\n";
      return 2;
    }
    out << text << "\n";
  }
  for (const auto& c : ctx.checks)
    if (!c["passed"].get<bool>() && status == 0) status = 1;
  return status;
}
