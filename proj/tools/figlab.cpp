#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "figlab/figlab.hpp"

using namespace figlab;

namespace {

struct Options {
  std::vector<std::string> files;
  std::optional<int> window;
  int retries = 3;
  std::string format = "json";
  std::uint64_t seed = 0;
  int imax = 2;
  int count = 0;
  GenerateParams gen;
};

void emit(const std::vector<Json>& rows, const std::string& format) {
  if (format == "csv") std::cout << csv_table(rows);
  else if (format == "table") std::cout << text_table(rows);
  else std::cout << Json(rows).dump(2) << "\n";
}

/// The module a command works on: a presentation is materialized at the
/// default or overridden window, a raw module is used as given.
template <class K>
Module<K> working_module(const ModuleInput<K>& in, const Options& o) {
  if (in.raw) {
    validate_module(*in.raw);
    return *in.raw;
  }
  const auto& P = *in.presentation;
  return materialize(P, o.window ? *o.window : 2 * P.max_degree() + 2);
}

std::vector<std::pair<std::string, std::string>> sources(const Options& o) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : o.files) out.emplace_back(f, std::string());
  for (int i = 0; i < o.count; ++i) {
    GenerateParams gp = o.gen;
    if (i % 2 == 1 && gp.p == 2) gp.p = 3;
    const auto P = random_presentation(o.seed + static_cast<std::uint64_t>(i), gp);
    out.emplace_back("random-" + std::to_string(o.seed + static_cast<std::uint64_t>(i)),
                     presentation_json(P, "random-" + std::to_string(o.seed + static_cast<std::uint64_t>(i))).dump());
  }
  return out;
}

ModuleSource load(const std::pair<std::string, std::string>& s) {
  return s.second.empty() ? read_module_file(s.first) : parse_module_source(s.second, s.first);
}

int cmd_validate(const Options& o) {
  int rc = 0;
  for (const auto& s : sources(o)) {
    try {
      const auto src = load(s);
      with_field(src.field, [&](const auto& k) {
        const auto in = parse_module(src, k);
        validate_module(working_module(in, o));
      });
      std::cout << "ok " << src.id << "\n";
    } catch (const ValidationError& e) {
      std::cout << "invalid " << s.first << ": " << e.what() << "\n";
      rc = 2;
    } catch (const ParseError& e) {
      std::cout << "invalid " << s.first << ": " << e.what() << "\n";
      rc = 2;
    }
  }
  return rc;
}

int cmd_invariants(const Options& o) {
  std::vector<Json> rows;
  int rc = 0;
  for (const auto& s : sources(o)) {
    const auto src = load(s);
    with_field(src.field, [&](const auto& k) {
      const auto in = parse_module(src, k);
      if (in.raw) {
        validate_module(*in.raw);
        rows.push_back(report_json(analyze(*in.raw, src.id)));
        return;
      }
      std::optional<InvariantReport> last;
      try {
        rows.push_back(report_json(certify(*in.presentation, src.id, {o.window, o.retries, o.imax}, &last)));
      } catch (const WindowExhausted& e) {
        std::cerr << e.what() << "\n";
        if (last) rows.push_back(report_json(*last));
        rc = 3;
      }
    });
  }
  emit(rows, o.format);
  return rc;
}

int cmd_homology(const Options& o) {
  std::vector<Json> rows;
  for (const auto& s : sources(o)) {
    const auto src = load(s);
    with_field(src.field, [&](const auto& k) {
      const auto V = working_module(parse_module(src, k), o);
      const auto R = resolve(V, o.imax + 1, CoverPolicy::filtered);
      rows.push_back(Json{{"module-id", src.id}, {"i", 0}, {"hd", degree_json(generating_degree_raw(V))},
                          {"dims", h0(V).dims()}, {"window_used", V.window()}});
      for (int i = 1; i <= o.imax; ++i) {
        const auto H = h_i_from(R, i);
        rows.push_back(Json{{"module-id", src.id}, {"i", i}, {"hd", degree_json(top_degree(H))}, {"dims", H.dims()},
                            {"window_used", V.window()}});
      }
    });
  }
  emit(rows, o.format);
  return 0;
}

int cmd_localcoh(const Options& o) {
  std::vector<Json> rows;
  for (const auto& s : sources(o)) {
    const auto src = load(s);
    with_field(src.field, [&](const auto& k) {
      const auto V = working_module(parse_module(src, k), o);
      const auto P = local_cohomology_profile(V);
      for (std::size_t i = 0; i < P.H.size(); ++i) {
        rows.push_back(Json{{"module-id", src.id}, {"i", i}, {"td", degree_json(P.td[i])}, {"dims", P.H[i].dims()},
                            {"b", P.complex.b}, {"window_used", V.window()}});
      }
    });
  }
  emit(rows, o.format);
  return 0;
}

int cmd_depth(const Options& o) {
  std::vector<Json> rows;
  for (const auto& s : sources(o)) {
    const auto src = load(s);
    with_field(src.field, [&](const auto& k) {
      const auto V = working_module(parse_module(src, k), o);
      const auto P = local_cohomology_profile(V);
      rows.push_back(Json{{"module-id", src.id},
                          {"depth_lc", degree_json(P.depth)},
                          {"depth_classical", degree_json(classical_depth(V).value)},
                          {"depth_derivative", degree_json(derivative_depth(V).value)},
                          {"cd", degree_json(P.cd)},
                          {"window_used", V.window()}});
    });
  }
  emit(rows, o.format);
  return 0;
}

/// dim Ext^i(T, V) for the first file T against each later file V.
int cmd_ext(const Options& o) {
  const auto all = sources(o);
  if (all.size() < 2) throw PreconditionError("ext needs a first module T and at least one module V");
  const auto src_t = load(all.front());
  std::vector<Json> rows;
  for (std::size_t j = 1; j < all.size(); ++j) {
    const auto src = load(all[j]);
    if (src.field != src_t.field) throw PreconditionError(src.id + ": field differs from " + src_t.id);
    with_field(src.field, [&](const auto& k) {
      const auto T = working_module(parse_module(src_t, k), o);
      const auto V = working_module(parse_module(src, k), o);
      if (!(T.ctx().group() == V.ctx().group())) throw PreconditionError(src.id + ": group differs from " + src_t.id);
      const int D = std::min(T.window(), V.window());
      rows.push_back(Json{{"T", src_t.id}, {"V", src.id}, {"ext", ext_dims(truncate(T, D), truncate(V, D), o.imax)},
                          {"window_used", D}});
    });
  }
  emit(rows, o.format);
  return 0;
}

int cmd_conjecture(const Options& o) {
  std::vector<Json> rows;
  for (const auto& s : sources(o)) {
    Json row{{"module-id", s.first}};
    try {
      const auto src = load(s);
      with_field(src.field, [&](const auto& k) {
        const auto in = parse_module(src, k);
        InvariantReport r;
        std::optional<Module<std::decay_t<decltype(k)>>> V = in.raw;
        if (V) {
          r = analyze(*V, src.id);
        } else {
          r = certify(*in.presentation, src.id, {o.window, o.retries, o.imax});
          V = materialize(*in.presentation, r.window_used);
        }
        const auto c = conjecture_row(*V, r);
        row = Json{{"module-id", c.module_id}, {"reg", degree_json(c.reg)}, {"rhs", degree_json(c.rhs)},
                   {"gap", c.gap ? Json(*c.gap) : Json(nullptr)}, {"applicable", c.applicable},
                   {"torsion_check", c.torsion_check}, {"shift_check", c.shift_check}, {"certified", c.certified},
                   {"error", ""}};
      });
    } catch (const Error& e) {
      row = Json{{"module-id", s.first}, {"reg", nullptr}, {"rhs", nullptr}, {"gap", nullptr}, {"applicable", false},
                 {"torsion_check", "n/a"}, {"shift_check", "n/a"}, {"certified", false}, {"error", e.what()}};
    }
    rows.push_back(std::move(row));
  }
  emit(rows, o.format);
  return 0;
}

int cmd_generate(const Options& o) {
  std::cout << presentation_json(random_presentation(o.seed, o.gen), "random-" + std::to_string(o.seed)).dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figlab: exact computations with FI_G-modules"};
  app.require_subcommand(1);
  Options o;
  const auto common = [&](CLI::App* c, bool files) {
    if (files) c->add_option("files", o.files, "module files (JSON)");
    c->add_option("--window", o.window, "materialization window (default 2 max degree + 2)");
    c->add_option("--retries", o.retries, "window doublings before giving up")->check(CLI::NonNegativeNumber);
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    c->add_option("--seed", o.seed, "seed for generated modules");
    c->add_option("--imax", o.imax, "largest homological index")->check(CLI::NonNegativeNumber);
  };
  std::map<std::string, int (*)(const Options&)> commands{
      {"validate", cmd_validate}, {"invariants", cmd_invariants}, {"homology", cmd_homology},
      {"localcoh", cmd_localcoh}, {"depth", cmd_depth},           {"conjecture", cmd_conjecture},
      {"ext", cmd_ext},
      {"generate", cmd_generate}};
  const std::map<std::string, std::string> help{
      {"validate", "check module files"},
      {"invariants", "certified invariant report"},
      {"homology", "FI-homology H_i and hd_i"},
      {"localcoh", "local cohomology H^i_m"},
      {"depth", "depth three ways and cd"},
      {"ext", "dim Ext^i(T, V) for the first file T"},
      {"conjecture", "regularity conjecture rows"},
      {"generate", "random F_p presentation"}};
  for (const auto& [name, fn] : commands) {
    auto* c = app.add_subcommand(name, help.at(name));
    common(c, name != "generate");
    if (name == "conjecture" || name == "generate" || name == "validate") {
      if (name != "generate") c->add_option("--generate", o.count, "also scan this many generated modules");
      c->add_option("--p", o.gen.p, "characteristic of generated modules")->check(CLI::Range(2u, 65521u));
      c->add_option("--group-order", o.gen.group_order, "order of the cyclic group G")->check(CLI::PositiveNumber);
      c->add_option("--max-degree", o.gen.max_degree, "largest generator degree")->check(CLI::Range(0, 3));
    }
  }
  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (o.gen.p != 2 && !is_prime(o.gen.p)) throw ValidationError("--p must be prime");
    return commands.at(name)(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const WindowExhausted& e) {
    std::cerr << "window exhausted: " << e.what() << "\n";
    return 3;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "dimension cap: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
