#pragma once

// Command-line front end: compute, check, build, verify, oracle.
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 budget.

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammakk/gammakk.hpp"

namespace gammakk::cli {

using nlohmann::json;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Output {
  std::string format = "json";
  std::string path;
};

inline void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path);
  if (!f) throw MalformedInput("cannot write " + o.path);
  f << text;
}

inline std::string csv_row(const std::string& name, const IntVector& v) {
  std::string s = name;
  for (auto x : v) s += "," + std::to_string(x);
  return s + "\n";
}

inline std::string text_value(const json& v) {
  if (v.is_array()) {
    IntVector iv;
    for (const auto& x : v) {
      if (!x.is_number_integer()) return v.dump();
      iv.push_back(x.get<std::int64_t>());
    }
    return to_string(iv);
  }
  return v.is_string() ? v.get<std::string>() : v.dump();
}

/// "key: value" lines for a flat object; vectors use the (a,b,c) notation.
inline std::string as_text(const json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) s += k + ": " + text_value(v) + "\n";
  return s;
}

/// Rows "name,v0,v1,..." for every integer-array field.
inline std::string as_csv(const json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array()) continue;
    IntVector iv;
    bool ints = true;
    for (const auto& x : v) {
      if (!x.is_number_integer()) {
        ints = false;
        break;
      }
      iv.push_back(x.get<std::int64_t>());
    }
    if (ints) s += csv_row(k, iv);
  }
  return s;
}

inline std::string render_report(const json& j, const std::string& format) {
  if (format == "text") return as_text(j);
  if (format == "csv") return as_csv(j);
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------

inline json compute_report(const Complex& c) {
  json j;
  const auto f = c.f_vector();
  const auto h = f_to_h(f);
  const bool sym = is_symmetric(h);
  j["f"] = f;
  j["h"] = h;
  j["symmetric"] = sym;
  j["f_kk"] = kk_check(f);
  if (sym) {
    const auto g = h_to_gamma(h);
    j["gamma"] = g;
    j["kk"] = kk_check(g);
    j["ffk"] = ffk_check(g);
    j["gal34"] = gal_34_check(g);
  } else {
    j["gamma_note"] = "h not symmetric: gamma undefined";
  }
  j["flag"] = is_flag(c);
  j["betti"] = betti(c);
  j["homology_sphere"] = is_homology_sphere(c);
  return j;
}

struct CheckVerdict {
  bool pass;
  json report;
};

inline CheckVerdict run_check(const std::string& mode, const IntVector& v, std::optional<int> colors) {
  json j{{"mode", mode}, {"vector", v}};
  bool pass = true;
  if (mode == "kk") {
    auto bad = kk_first_violation(v);
    pass = !bad;
    if (bad && *bad > 0) {
      j["index"] = *bad;
      j["bound"] = kk_shadow_bound(v[*bad + 1], static_cast<int>(*bad + 1));
      j["value"] = v[*bad];
    } else if (bad) {
      j["reason"] = "v_0 must be 1 and all entries nonnegative";
    }
  } else if (mode == "ffk") {
    const int r = colors.value_or(default_colors(v));
    j["colors"] = r;
    pass = ffk_check(v, r);
    if (!pass) {
      if (v.empty() || v[0] != 1 || std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
        j["reason"] = "v_0 must be 1 and all entries nonnegative";
      } else {
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
          auto b = ffk_shadow_bound(v[i + 1], static_cast<int>(i + 1), r);
          if (b > v[i]) {
            j["index"] = i;
            j["bound"] = b;
            j["value"] = v[i];
            break;
          }
        }
      }
    }
  } else if (mode == "gal34") {
    pass = gal_34_check(v);
    if (!pass) {
      IntVector g = v;
      g.resize(std::max<std::size_t>(g.size(), 3), 0);
      j["index"] = 2;
      j["bound"] = g[1] >= 0 ? g[1] * g[1] / 4 : 0;
      j["value"] = g[2];
    }
  } else {
    throw DomainError("unknown check mode \"" + mode + "\" (expected kk, ffk or gal34)");
  }
  j["pass"] = pass;
  return {pass, j};
}

/// γ-vector that the Γ-complex of `family` at n is meant to realize.
inline IntVector expected_gamma(Family f, int n) {
  switch (f) {
    case Family::A: return h_to_gamma(eulerian(CoxeterType::A, n));
    case Family::B: return h_to_gamma(eulerian(CoxeterType::B, n));
    case Family::D: return h_to_gamma(eulerian(CoxeterType::D, n));
    case Family::Assoc: return count_by_des(enumerate_pk312(n));
    case Family::Cyc: {
      IntVector g;
      BigInt fact = 1;
      std::vector<BigInt> fac{1};
      for (int k = 1; k <= n; ++k) fac.push_back(fac.back() * k);
      for (int i = 0; 2 * i <= n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        g.push_back(static_cast<std::int64_t>(fac[static_cast<std::size_t>(n)] /
                                              (fac[ui] * fac[ui] * fac[static_cast<std::size_t>(n - 2 * i)])));
      }
      return g;
    }
  }
  return {};
}

inline json build_report(Family fam, int n, const std::string& emit_kind, std::size_t budget) {
  auto g = build_gamma_complex(fam, n, budget);
  json j{{"family", family_name(fam)}, {"n", n}, {"f", g.complex.f_vector()}};
  const auto want = expected_gamma(fam, n);
  j["gamma"] = want;
  j["f_equals_gamma"] = poly_equal(g.complex.f_vector(), want);
  if (emit_kind == "faces") {
    j["vertices"] = g.labels;
    json facets = json::array();
    for (const Face& f : g.complex.facets()) {
      json row = json::array();
      for (Vertex v : f) row.push_back(g.labels[static_cast<std::size_t>(v)]);
      facets.push_back(row);
    }
    j["facets"] = facets;
  }
  return j;
}

inline json complex_summary(const Complex& c) {
  json j{{"facets", c.facets()}, {"f", c.f_vector()}};
  const auto h = f_to_h(c.f_vector());
  j["h"] = h;
  if (is_symmetric(h)) j["gamma"] = h_to_gamma(h);
  return j;
}

// ---------------------------------------------------------------------------

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gammakk: f-, h- and gamma-vectors, inequality checks and gamma-complexes"};
  app.require_subcommand(1);
  Output o;
  std::size_t budget = kDefaultFaceBudget;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.path, "Write output to this file");
    sub->add_option("--budget-faces", budget, "Face budget")->check(CLI::PositiveNumber);
  };

  std::string facets_path;
  auto* compute = app.add_subcommand("compute", "Vectors, inequalities and homology of a facet file");
  compute->add_option("--facets", facets_path, "Facet file (text or JSON)")->required();
  add_common(compute);

  std::string mode;
  std::vector<std::int64_t> values;
  std::optional<int> colors;
  auto* check = app.add_subcommand("check", "Test an integer vector: kk, ffk or gal34");
  check->add_option("mode", mode, "kk | ffk | gal34")->required()->check(CLI::IsMember({"kk", "ffk", "gal34"}));
  check->add_option("values", values, "Vector entries")->required();
  check->add_option("--colors", colors, "Color count for ffk");
  add_common(check);

  std::string family;
  int n = 0;
  std::string emit_kind = "fvector";
  auto* build = app.add_subcommand("build", "Build a gamma-complex");
  build->add_option("--family", family, "A | B | D | assoc | cyc")->required();
  build->add_option("--n", n, "Size parameter")->required();
  build->add_option("--emit", emit_kind, "faces | fvector")->check(CLI::IsMember({"faces", "fvector"}));
  add_common(build);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "all | coxeter | assoc | cyc | small-spheres | inequalities")
      ->check(CLI::IsMember(suite_names()));
  add_common(verify);

  std::string coxeter;
  int assoc = 0;
  bool spheres = false;
  int max_vertices = 8;
  auto* oracle = app.add_subcommand("oracle", "Model complexes: Coxeter, associahedron, flag 2-spheres");
  oracle->add_option("--coxeter", coxeter, "A | B")->check(CLI::IsMember({"A", "B"}));
  oracle->add_option("--assoc", assoc, "Polygon-diagonal associahedron for n");
  oracle->add_flag("--spheres", spheres, "Enumerate flag 2-spheres");
  oracle->add_option("--max-vertices", max_vertices, "Vertex bound for --spheres");
  oracle->add_option("--n", n, "Size parameter for --coxeter");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) {
      Complex c = read_complex(facets_path, budget);
      emit(o, render_report(compute_report(c), o.format), out);
      return kPass;
    }
    if (*check) {
      auto verdict = run_check(mode, values, colors);
      emit(o, render_report(verdict.report, o.format), out);
      return verdict.pass ? kPass : kCheckFailed;
    }
    if (*build) {
      const Family fam = parse_family(family);
      emit(o, render_report(build_report(fam, n, emit_kind, budget), o.format), out);
      return kPass;
    }
    if (*verify) {
      bool all_pass = true;
      json rows = json::array();
      std::ostringstream text;
      run_checks(suite, [&](const CheckOutcome& r) {
        all_pass = all_pass && r.result.pass;
        rows.push_back({{"criterion", r.check->criterion},
                        {"id", r.check->id},
                        {"pass", r.result.pass},
                        {"seconds", std::round(r.seconds * 1000) / 1000},
                        {"detail", r.result.detail}});
        text << (r.result.pass ? "PASS " : "FAIL ") << r.check->id << " (" << std::fixed << std::setprecision(2)
             << r.seconds << "s): " << r.result.detail << "\n";
      });
      if (o.format == "json")
        emit(o, json{{"suite", suite}, {"pass", all_pass}, {"checks", rows}}.dump(2) + "\n", out);
      else
        emit(o, text.str(), out);
      return all_pass ? kPass : kCheckFailed;
    }
    if (*oracle) {
      json j;
      if (spheres) {
        j = json::array();
        for (const auto& c : enumerate_flag_2spheres(max_vertices)) j.push_back(complex_summary(c));
      } else if (!coxeter.empty()) {
        j = complex_summary(coxeter_complex(coxeter == "A" ? CoxeterType::A : CoxeterType::B, n));
        j["type"] = coxeter;
        j["n"] = n;
      } else if (assoc > 0) {
        j = complex_summary(associahedron_complex(assoc));
        j["n"] = assoc;
      } else {
        err << "oracle: give --coxeter TYPE --n K, --assoc K or --spheres\n";
        return kUsage;
      }
      emit(o, (o.format == "json" || j.is_array()) ? j.dump() + "\n" : render_report(j, o.format), out);
      return kPass;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gammakk::cli
