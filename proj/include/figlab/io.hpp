#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "figlab/report.hpp"

namespace figlab {

using Json = nlohmann::ordered_json;

/// A parsed module file before the field is fixed.
struct ModuleSource {
  std::string id;
  FieldSpec field;
  Json doc;
};

/// Presentation or raw truncated module over a concrete field.
template <class K>
struct ModuleInput {
  K field;
  WreathContext ctx;
  std::optional<Presentation<K>> presentation;
  std::optional<Module<K>> raw;
};

namespace io_detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int need_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer, got " + j.dump());
  return j.get<int>();
}

inline std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(need_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class K>
typename K::value_type element(const K& k, const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return k.parse(j.get<std::string>());
    if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a field element, got " + j.dump());
}

template <class K>
Matrix<K> matrix(const K& k, const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    fail(where, "expected " + std::to_string(rows) + " rows, got " + (j.is_array() ? std::to_string(j.size()) : j.dump()));
  }
  Matrix<K> m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      fail(where + " row " + std::to_string(r), "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = element(k, row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

template <class K>
Json matrix_json(const K& k, const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(k.to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline FieldSpec field_spec(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return {FieldSpec::Kind::rationals, 0};
  if (j.is_object() && j.contains("Fp")) {
    const int p = need_int(j.at("Fp"), where + ".Fp");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(where, std::to_string(p) + " is not a prime");
    return {FieldSpec::Kind::prime, static_cast<std::uint32_t>(p)};
  }
  fail(where, "expected \"Q\" or {\"Fp\": p}");
}

}  // namespace io_detail

/// {"order", "identity": 0, "mul", "generators"}; "trivial" and {"cyclic": n}
/// are accepted as shorthands.
inline FiniteGroup parse_group(const Json& j) {
  using namespace io_detail;
  if (j.is_string() && j.get<std::string>() == "trivial") return FiniteGroup::trivial();
  if (j.is_object() && j.contains("cyclic")) return FiniteGroup::cyclic(need_int(j.at("cyclic"), "group.cyclic"));
  const int order = need_int(need(j, "order", "group"), "group.order");
  if (j.contains("identity") && need_int(j.at("identity"), "group.identity") != 0) {
    throw ValidationError("group: the identity must be element 0");
  }
  const Json& mul = need(j, "mul", "group");
  if (!mul.is_array() || static_cast<int>(mul.size()) != order) fail("group.mul", "expected " + std::to_string(order) + " rows");
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < mul.size(); ++r) table.push_back(int_list(mul[r], "group.mul[" + std::to_string(r) + "]"));
  return FiniteGroup::make(std::move(table), int_list(need(j, "generators", "group"), "group.generators"));
}

inline Json group_json(const FiniteGroup& g) {
  return Json{{"order", g.order}, {"identity", 0}, {"mul", g.mul}, {"generators", g.generators}};
}

inline Json field_json(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::rationals ? Json("Q") : Json{{"Fp", f.p}};
}

template <class K>
FieldSpec spec_of(const K& k) {
  return k.characteristic() == 0 ? FieldSpec{FieldSpec::Kind::rationals, 0}
                                 : FieldSpec{FieldSpec::Kind::prime, k.characteristic()};
}

/// {"dim", "mats"} with one matrix per canonical generator of G_n, or one of
/// the names "trivial", "regular", "sign".
template <class K>
RepMatrices<K> parse_rep(const WreathContext& ctx, const K& k, int n, const Json& j, const std::string& where) {
  using namespace io_detail;
  RepMatrices<K> r;
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "trivial") r = trivial_rep(ctx, k, n);
    else if (name == "regular") r = regular_rep(ctx, k, n);
    else if (name == "sign") r = sign_rep(ctx, k, n);
    else fail(where, "unknown representation \"" + name + "\"");
  } else {
    const int d = need_int(need(j, "dim", where), where + ".dim");
    if (d < 0) fail(where, "negative dimension");
    const Json& mats = need(j, "mats", where);
    if (!mats.is_array() || static_cast<int>(mats.size()) != ctx.num_gens(n)) {
      fail(where + ".mats", "expected " + std::to_string(ctx.num_gens(n)) + " generator matrices for G_" + std::to_string(n));
    }
    r = {n, static_cast<std::size_t>(d), {}};
    for (std::size_t i = 0; i < mats.size(); ++i) {
      r.mats.push_back(matrix(k, mats[i], r.dim, r.dim, where + ".mats[" + std::to_string(i) + "]"));
    }
  }
  validate_rep(ctx, k, r, where);
  return r;
}

template <class K>
Json rep_json(const K& k, const RepMatrices<K>& r) {
  Json mats = Json::array();
  for (const auto& m : r.mats) mats.push_back(io_detail::matrix_json(k, m));
  return Json{{"dim", r.dim}, {"mats", std::move(mats)}};
}

/// Relation terms: coeff * ((f, g) (x) e_w) in column u, where the decorated
/// injection [b] -> [a] is f(x) = subset[perm[x]], g(x) = dec[x].
template <class K>
Matrix<K> parse_relation_map(const WreathContext& ctx, const K& k, const std::vector<RepMatrices<K>>& gens,
                             const RepMatrices<K>& U, const Json& j, const std::string& where) {
  using namespace io_detail;
  const int a = U.n;
  std::vector<std::size_t> offset{0};
  for (const auto& W : gens) offset.push_back(offset.back() + (W.n <= a ? binom(a, W.n) * W.dim : 0));
  Matrix<K> m(k, offset.back(), U.dim);
  const Json& terms = need(j, "terms", where);
  if (!terms.is_array()) fail(where + ".terms", "expected a list");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tw = where + ".terms[" + std::to_string(t) + "]";
    const Json& term = terms[t];
    const int gi = need_int(need(term, "gen", tw), tw + ".gen");
    if (gi < 0 || gi >= static_cast<int>(gens.size())) fail(tw, "generator index out of range");
    const auto& W = gens[gi];
    const int b = W.n;
    if (b > a) fail(tw, "generator degree exceeds the relation degree");
    const auto subset = int_list(need(term, "subset", tw), tw + ".subset");
    if (static_cast<int>(subset.size()) != b) fail(tw, "subset must have " + std::to_string(b) + " elements");
    std::vector<int> perm(b), dec(b, 0);
    for (int x = 0; x < b; ++x) perm[x] = x;
    if (term.contains("perm")) perm = int_list(term.at("perm"), tw + ".perm");
    if (term.contains("dec")) dec = int_list(term.at("dec"), tw + ".dec");
    if (static_cast<int>(perm.size()) != b || static_cast<int>(dec.size()) != b) fail(tw, "perm/dec length mismatch");
    Morphism e{a, std::vector<int>(b), dec};
    std::vector<bool> seen(b, false);
    for (int x = 0; x < b; ++x) {
      if (perm[x] < 0 || perm[x] >= b || seen[perm[x]]) fail(tw, "perm is not a permutation");
      seen[perm[x]] = true;
      e.f[x] = subset[perm[x]];
      if (e.f[x] < 0 || e.f[x] >= a) fail(tw, "subset entry outside [" + std::to_string(a) + "]");
      if (dec[x] < 0 || dec[x] >= ctx.group_order()) fail(tw, "decoration outside G");
    }
    const int w = need_int(need(term, "w", tw), tw + ".w");
    if (w < 0 || w >= static_cast<int>(W.dim)) fail(tw, "w out of range");
    const int u = term.contains("u") ? need_int(term.at("u"), tw + ".u") : 0;
    if (u < 0 || u >= static_cast<int>(U.dim)) fail(tw, "u out of range");
    const auto c = term.contains("coeff") ? element(k, term.at("coeff"), tw + ".coeff") : k.one();
    const MorphismNF nf = ctx.normal_form(e);
    const Vec<K> hw = apply_element(ctx, W, nf.h, unit_vec(k, W.dim, w));
    const std::size_t row0 = offset[gi] + colex_rank(nf.subset) * W.dim;
    for (std::size_t r = 0; r < W.dim; ++r) m(row0 + r, u) = k.add(m(row0 + r, u), k.mul(c, hw[r]));
  }
  return m;
}

/// Inverse of parse_relation_map in the canonical basis (identity perm and dec).
template <class K>
Json relation_map_json(const K& k, const std::vector<RepMatrices<K>>& gens, const Matrix<K>& m, int a) {
  Json terms = Json::array();
  std::size_t off = 0;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& W = gens[gi];
    if (W.n > a) continue;
    const auto& subsets = subsets_colex(a, W.n);
    for (std::size_t si = 0; si < subsets.size(); ++si) {
      for (std::size_t w = 0; w < W.dim; ++w) {
        for (std::size_t u = 0; u < m.cols(); ++u) {
          const auto& c = m(off + si * W.dim + w, u);
          if (c == k.zero()) continue;
          terms.push_back(Json{{"gen", gi}, {"subset", subsets[si]}, {"w", w}, {"coeff", k.to_string(c)}, {"u", u}});
        }
      }
    }
    off += subsets.size() * W.dim;
  }
  return Json{{"terms", std::move(terms)}};
}

inline ModuleSource parse_module_source(const std::string& text, const std::string& id) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(id + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(id + ": top level must be an object");
  return {doc.contains("id") && doc.at("id").is_string() ? doc.at("id").get<std::string>() : id,
          io_detail::field_spec(io_detail::need(doc, "field", id), id + ".field"), doc};
}

/// Reads a module file; the id defaults to the file stem.
inline ModuleSource read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find_last_of('.'));
  return parse_module_source(ss.str(), stem);
}

/// Calls fn with the concrete field object the FieldSpec names.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

template <class K>
ModuleInput<K> parse_module(const ModuleSource& src, const K& k) {
  using namespace io_detail;
  const Json& doc = src.doc;
  ModuleInput<K> in{k, WreathContext(doc.contains("group") ? parse_group(doc.at("group")) : FiniteGroup::trivial()), {}, {}};
  const std::string mode = doc.contains("mode") ? doc.at("mode").get<std::string>() : "presentation";
  if (mode == "presentation") {
    Presentation<K> p{k, in.ctx, {}, {}};
    const Json& gens = need(doc, "generators", src.id);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string w = "generators[" + std::to_string(i) + "]";
      const int n = need_int(need(gens[i], "degree", w), w + ".degree");
      if (n < 0) fail(w, "negative degree");
      p.generators.push_back(parse_rep(in.ctx, k, n, need(gens[i], "rep", w), w + ".rep"));
    }
    if (doc.contains("relations")) {
      const Json& rels = doc.at("relations");
      for (std::size_t i = 0; i < rels.size(); ++i) {
        const std::string w = "relations[" + std::to_string(i) + "]";
        const int n = need_int(need(rels[i], "degree", w), w + ".degree");
        auto U = parse_rep(in.ctx, k, n, need(rels[i], "rep", w), w + ".rep");
        auto m = parse_relation_map(in.ctx, k, p.generators, U, need(rels[i], "map", w), w + ".map");
        p.relations.push_back({std::move(U), std::move(m)});
      }
    }
    in.presentation = std::move(p);
  } else if (mode == "raw") {
    typename Module<K>::Data d;
    d.field = k;
    d.ctx = in.ctx;
    d.window = need_int(need(doc, "window", src.id), "window");
    if (d.window < 0) fail("window", "negative window");
    d.valid_through = doc.contains("valid_through") ? need_int(doc.at("valid_through"), "valid_through") : d.window;
    const auto dims = int_list(need(doc, "dims", src.id), "dims");
    const Json& acts = need(doc, "actions", src.id);
    const Json& trans = need(doc, "trans", src.id);
    if (static_cast<int>(dims.size()) != d.window + 1 || static_cast<int>(acts.size()) != d.window + 1 ||
        static_cast<int>(trans.size()) != d.window) {
      fail(src.id, "raw module needs window+1 dims and actions and window transitions");
    }
    for (int n = 0; n <= d.window; ++n) {
      RepMatrices<K> r{n, static_cast<std::size_t>(dims[n]), {}};
      const std::string w = "actions[" + std::to_string(n) + "]";
      if (!acts[n].is_array() || static_cast<int>(acts[n].size()) != in.ctx.num_gens(n)) {
        fail(w, "expected " + std::to_string(in.ctx.num_gens(n)) + " generator matrices");
      }
      for (std::size_t i = 0; i < acts[n].size(); ++i) {
        r.mats.push_back(matrix(k, acts[n][i], r.dim, r.dim, w + "[" + std::to_string(i) + "]"));
      }
      d.actions.push_back(std::move(r));
    }
    for (int n = 0; n < d.window; ++n) {
      d.trans.push_back(matrix(k, trans[n], dims[n + 1], dims[n], "trans[" + std::to_string(n) + "]"));
    }
    in.raw = Module<K>(std::move(d));
  } else {
    fail("mode", "expected \"presentation\" or \"raw\"");
  }
  return in;
}

template <class K>
Json presentation_json(const Presentation<K>& p, const std::string& id = {}) {
  Json doc;
  if (!id.empty()) doc["id"] = id;
  doc["field"] = field_json(spec_of(p.field));
  doc["group"] = group_json(p.ctx.group());
  doc["mode"] = "presentation";
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(Json{{"degree", g.n}, {"rep", rep_json(p.field, g)}});
  doc["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    rels.push_back(Json{{"degree", r.rep.n},
                        {"rep", rep_json(p.field, r.rep)},
                        {"map", relation_map_json(p.field, p.generators, r.map, r.rep.n)}});
  }
  doc["relations"] = std::move(rels);
  return doc;
}

template <class K>
Json raw_module_json(const Module<K>& V, const std::string& id = {}) {
  const K& k = V.field();
  Json doc;
  if (!id.empty()) doc["id"] = id;
  doc["field"] = field_json(spec_of(k));
  doc["group"] = group_json(V.ctx().group());
  doc["mode"] = "raw";
  doc["window"] = V.window();
  if (V.valid_through() != V.window()) doc["valid_through"] = V.valid_through();
  doc["dims"] = V.dims();
  Json acts = Json::array();
  for (int n = 0; n <= V.window(); ++n) {
    Json a = Json::array();
    for (const auto& m : V.rep(n).mats) a.push_back(io_detail::matrix_json(k, m));
    acts.push_back(std::move(a));
  }
  doc["actions"] = std::move(acts);
  Json trans = Json::array();
  for (int n = 0; n < V.window(); ++n) trans.push_back(io_detail::matrix_json(k, V.trans(n)));
  doc["trans"] = std::move(trans);
  return doc;
}

inline Json degree_json(const Degree& d) { return d.finite() ? Json(d.value()) : Json(d.to_string()); }

inline Json report_json(const InvariantReport& r) {
  Json lc = Json::array();
  for (const auto& t : r.lc_td) lc.push_back(degree_json(t));
  return Json{{"module-id", r.module_id},
              {"field", r.field},
              {"group", r.group},
              {"gd", degree_json(r.gd)},
              {"td", degree_json(r.td)},
              {"reg", degree_json(r.reg)},
              {"reg_status", to_string(r.reg_status)},
              {"N_direct", degree_json(r.N_direct)},
              {"N_formula", degree_json(r.N_formula)},
              {"depth_lc", degree_json(r.depth_lc)},
              {"depth_classical", degree_json(r.depth_classical)},
              {"depth_derivative", degree_json(r.depth_derivative)},
              {"cd", degree_json(r.cd)},
              {"lc_td", std::move(lc)},
              {"conjecture_rhs", degree_json(r.conjecture_rhs)},
              {"gap", r.gap ? Json(*r.gap) : Json(nullptr)},
              {"certified", r.certified},
              {"window_used", r.window_used},
              {"N_bound", degree_json(r.N_bound)},
              {"reg_bound", degree_json(r.reg_bound)}};
}

/// CSV with the JSON keys as header; lists are joined with ';'.
inline std::string csv_table(const std::vector<Json>& rows) {
  if (rows.empty()) return {};
  std::string out;
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    out += (first ? "" : ",") + it.key();
    first = false;
  }
  out += "\n";
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      std::string cell;
      if (it->is_string()) cell = it->get<std::string>();
      else if (it->is_array()) {
        for (std::size_t i = 0; i < it->size(); ++i) {
          cell += (i ? ";" : "") + ((*it)[i].is_string() ? (*it)[i].get<std::string>() : (*it)[i].dump());
        }
      } else if (it->is_null()) cell = "";
      else cell = it->dump();
      out += (first ? "" : ",") + cell;
      first = false;
    }
    out += "\n";
  }
  return out;
}

/// Aligned plain-text table of the same rows.
inline std::string text_table(const std::vector<Json>& rows) {
  if (rows.empty()) return {};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) head.push_back(it.key());
  cells.push_back(head);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (it->is_string()) line.push_back(it->get<std::string>());
      else if (it->is_null()) line.push_back("-");
      else line.push_back(it->dump());
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) {
      out += line[c] + std::string(width[c] - line[c].size() + (c + 1 < line.size() ? 2 : 0), ' ');
    }
    out += "\n";
  }
  return out;
}

}  // namespace figlab
