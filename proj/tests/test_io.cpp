#include <gtest/gtest.h>

#include <filesystem>

#include "figlab/figlab.hpp"

using namespace figlab;

namespace {

const RationalField QQ;
const PrimeField F3(3);
const WreathContext FI;
const WreathContext C2(FiniteGroup::cyclic(2));

template <class K>
ModuleInput<K> round_trip(const Json& doc, const K& k) {
  return parse_module(parse_module_source(doc.dump(), "rt"), k);
}

std::string parse_error_of(const std::string& text) {
  try {
    const auto src = parse_module_source(text, "t");
    with_field(src.field, [&](const auto& k) { parse_module(src, k); });
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, PresentationRoundTrip) {
  const auto check = [](const auto& P) {
    const auto in = round_trip(presentation_json(P, "x"), P.field);
    ASSERT_TRUE(in.presentation);
    EXPECT_EQ(materialize(*in.presentation, 5).dims(), materialize(P, 5).dims());
    EXPECT_EQ(presentation_json(*in.presentation, "x"), presentation_json(P, "x"));
  };
  check(kG_presentation(FI, QQ, 0));
  check(kG_presentation(C2, QQ, 1));
  check(J0_presentation(FI, QQ));
  check(J0_presentation(C2, F3));
}

TEST(Io, RawRoundTrip) {
  const auto V = materialize(J0_presentation(C2, F3), 4);
  const auto in = round_trip(raw_module_json(V, "raw"), F3);
  ASSERT_TRUE(in.raw);
  EXPECT_EQ(in.raw->dims(), V.dims());
  EXPECT_NO_THROW(validate_module(*in.raw));
  for (int n = 0; n < V.window(); ++n) EXPECT_EQ(in.raw->trans(n), V.trans(n));
}

TEST(Io, ShorthandReps) {
  const std::string doc = R"({"field": {"Fp": 5}, "group": {"cyclic": 3},
    "generators": [{"degree": 2, "rep": "regular"}, {"degree": 1, "rep": "trivial"}, {"degree": 2, "rep": "sign"}]})";
  const auto src = parse_module_source(doc, "s");
  const auto in = parse_module(src, PrimeField(5));
  ASSERT_TRUE(in.presentation);
  const auto& g = in.presentation->generators;
  EXPECT_EQ(g[0].dim, 18u);  // |C3 wr S_2| = 18
  EXPECT_EQ(g[1].dim, 1u);
  EXPECT_EQ(g[2].dim, 1u);
}

TEST(Io, ParseErrorsCarryPaths) {
  EXPECT_NE(parse_error_of("[1]").find("top level"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"generators": []})").find("field"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"field": "Q", "generators": [{"degree": -1, "rep": "trivial"}]})")
                .find("generators[0]"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"field": "Q", "generators": [{"degree": 2, "rep": {"dim": 2, "mats": []}}]})")
                .find("generators[0].rep"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"field": {"Fp": 4}, "generators": []})").find("field"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"field": "Q", "mode": "raw", "window": 1, "dims": [1], "actions": [], "trans": []})")
                .find("window"),
            std::string::npos);
  EXPECT_FALSE(parse_error_of("{not json").empty());
}

TEST(Io, GeneratedPresentationsValidate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenerateParams gp;
    gp.p = seed % 2 ? 3 : 2;
    const auto P = random_presentation(seed, gp);
    for (const auto& g : P.generators) EXPECT_LE(g.n, gp.max_degree);
    const auto in = round_trip(presentation_json(P, "g"), P.field);
    EXPECT_NO_THROW(validate_module(materialize(*in.presentation, 2 * P.max_degree() + 2)));
    EXPECT_EQ(presentation_json(random_presentation(seed, gp)), presentation_json(P));
  }
}

TEST(Io, DataFilesParse) {
  int count = 0;
  for (const auto& e : std::filesystem::directory_iterator(FIGLAB_DATA_DIR)) {
    if (e.path().extension() != ".json") continue;
    ++count;
    const auto src = read_module_file(e.path().string());
    EXPECT_EQ(src.id, e.path().stem().string());
    with_field(src.field, [&](const auto& k) {
      const auto in = parse_module(src, k);
      if (in.raw) {
        if (src.id == "bad_equivariance") EXPECT_THROW(validate_module(*in.raw), ValidationError);
        else EXPECT_NO_THROW(validate_module(*in.raw));
      } else {
        EXPECT_NO_THROW(validate_module(materialize(*in.presentation, 2 * in.presentation->max_degree() + 2)));
      }
    });
  }
  EXPECT_GE(count, 8);
}

TEST(Io, ReportSchema) {
  const auto r = analyze(materialize(kG_presentation(FI, QQ, 0), 4), "kG0");
  const Json j = report_json(r);
  const std::vector<std::string> keys{"module-id", "field", "group", "gd", "td", "reg", "reg_status", "N_direct",
                                      "N_formula", "depth_lc", "depth_classical", "depth_derivative", "cd", "lc_td",
                                      "conjecture_rhs", "gap", "certified", "window_used"};
  for (const auto& key : keys) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("field"), "Q");
  EXPECT_EQ(j.at("group"), "1");
  EXPECT_EQ(j.at("reg"), 0);

  const auto M = analyze(build_M(FI, QQ, trivial_rep(FI, QQ, 0), 4), "M0");
  const Json m = report_json(M);
  EXPECT_EQ(m.at("reg"), "-inf");
  EXPECT_EQ(m.at("depth_lc"), "+inf");
  EXPECT_TRUE(m.at("gap").is_null());

  const std::string csv = csv_table({j, m});
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "module-id,field,group,gd,td,reg,reg_status,N_direct,N_formula,depth_lc,depth_classical,"
            "depth_derivative,cd,lc_td,conjecture_rhs,gap,certified,window_used,N_bound,reg_bound");
  EXPECT_NE(csv.find("\nkG0,"), std::string::npos);
  EXPECT_NE(text_table({j}).find("kG0"), std::string::npos);
}

TEST(Report, ConjectureScanOnCuratedTorsionRows) {
  std::vector<std::pair<std::string, Presentation<RationalField>>> suite{
      {"kG0", kG_presentation(FI, QQ, 0)}, {"kG1", kG_presentation(FI, QQ, 1)}, {"J0", J0_presentation(FI, QQ)},
      {"M0", basic_presentation(FI, QQ, trivial_rep(FI, QQ, 0))}};
  const auto rows = conjecture_scan(suite);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(rows[i].certified) << rows[i].module_id;
    ASSERT_TRUE(rows[i].gap) << rows[i].module_id;
    EXPECT_EQ(*rows[i].gap, 0) << rows[i].module_id;
  }
  EXPECT_EQ(rows[1].reg, Degree(1));
  EXPECT_EQ(rows[1].torsion_check, "ok");
  EXPECT_EQ(rows[1].shift_check, "ok");  // Sigma kG_1 = kG_0 + kG_0 is torsion, reg 0
  EXPECT_FALSE(rows[3].applicable);
  EXPECT_FALSE(rows[3].gap);

  const auto r = invariant_report(materialize(J0_presentation(FI, QQ), 6), "J0");
  EXPECT_EQ(r.N_direct, Degree(1));
  EXPECT_EQ(r.N_formula, Degree(1));
  EXPECT_EQ(depth(materialize(J0_presentation(FI, QQ), 6)).value, Degree(1));
}

TEST(Groups, ValidateGroupWitness) {
  EXPECT_NO_THROW(validate_group(FiniteGroup::trivial()));
  EXPECT_NO_THROW(validate_group(FiniteGroup::cyclic(2)));
  FiniteGroup bad = FiniteGroup::cyclic(2);
  bad.mul[0][0] = 1;
  EXPECT_THROW(validate_group(bad), ValidationError);
  const auto e = C2.identity(3);
  EXPECT_TRUE(factor_element(C2, e).letters.empty());
}
