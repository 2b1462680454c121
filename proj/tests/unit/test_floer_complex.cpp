#include <gtest/gtest.h>

#include "plumbtau/floer_complex.hpp"
#include "support/floer_convert.hpp"
#include "support/oracles.hpp"

using namespace plumbtau;

namespace {

std::pair<FloerComplex, AlexanderFiltration> trefoil() {
  return parse_floer({"a 0 1", "b -1 0", "c -2 -1", "b -> a pow 1", "b -> c pow 0"});
}

std::pair<FloerComplex, AlexanderFiltration> unlink_model(int bottom_level = 0) {
  return parse_floer({"ell 2", "e0 0 0", "e1 -1 " + std::to_string(bottom_level)});
}

std::vector<oracle::Complex> corpus(std::size_t count, std::uint64_t salt) {
  oracle::ComplexFactory factory(oracle::seed() + salt);
  std::vector<oracle::Complex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(factory.make(i % 3 == 2 ? 2 : 1, 6));
  return out;
}

}  // namespace

TEST(Axioms, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 0 0"});
  EXPECT_TRUE(verify_axioms(single).ok());
  auto [t, ft] = trefoil();
  EXPECT_TRUE(verify_axioms(t).ok());
  auto [acyclic, fa] = parse_floer({"x 0 0", "y 1 0", "y -> x"});
  auto report = verify_axioms(acyclic);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.rank);
}

TEST(Axioms, DetectsEachViolation) {
  FloerComplex bad_grading;
  bad_grading.add_generator("x", 0);
  bad_grading.add_generator("y", 0);
  bad_grading.add_generator("z", 3);
  bad_grading.add_entry(2, 1, 0);
  auto r1 = verify_axioms(bad_grading);
  EXPECT_FALSE(r1.grading_law);

  // d^2 != 0: z -> y -> x with both entries at power 0.
  auto [sq, fsq] = parse_floer({"x 0 0", "y 1 0", "z 2 0", "w 2 0", "z -> y", "y -> x"});
  EXPECT_FALSE(verify_axioms(sq).boundary_squared_zero);

  // ell = 2 needs two towers of opposite parity.
  auto [same_parity, fp] = parse_floer({"ell 2", "a 0 0", "b 2 0"});
  EXPECT_FALSE(verify_axioms(same_parity).tower_gradings);
  auto [model, fm] = unlink_model();
  EXPECT_TRUE(verify_axioms(model).ok());
  EXPECT_THROW(correction_term(sq), StructureError);
}

TEST(Homology, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 4 0"});
  auto h1 = homology_minus(single);
  ASSERT_EQ(h1.towers.size(), 1u);
  EXPECT_EQ(h1.towers[0].grading, 4);
  EXPECT_TRUE(h1.torsion.empty());

  auto [t, ft] = trefoil();
  auto h2 = homology_minus(t);
  ASSERT_EQ(h2.towers.size(), 1u);
  EXPECT_EQ(h2.towers[0].grading, 0);
  EXPECT_TRUE(h2.torsion.empty());

  auto [tor, fto] = parse_floer({"z 0 0", "x 1 0", "y 0 0", "y -> x pow 1"});
  auto h3 = homology_minus(tor);
  ASSERT_EQ(h3.towers.size(), 1u);
  EXPECT_EQ(h3.towers[0].grading, 0);
  ASSERT_EQ(h3.torsion.size(), 1u);
  EXPECT_EQ(h3.torsion[0].grading, 1);
  EXPECT_EQ(h3.torsion[0].power, 1);
  EXPECT_EQ(free_rank(tor), 1u);
}

TEST(CorrectionTerm, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 6 0"});
  EXPECT_EQ(correction_term(single), 6);
  auto [t, ft] = trefoil();
  EXPECT_EQ(correction_term(t), 0);
  EXPECT_EQ(correction_term(shift_grading(t, 2)), 2);
}

TEST(ImageClasses, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 0 0"});
  auto im1 = image_classes(single);
  EXPECT_EQ(im1.theta_top, single.chain({"x"}));
  EXPECT_EQ(im1.theta_bot, single.chain({"x"}));

  auto [t, ft] = trefoil();
  auto im2 = image_classes(t);
  EXPECT_EQ(im2.d, 0);
  EXPECT_EQ(im2.theta_top, t.chain({"a"}));
  EXPECT_EQ(hat_complex(t).entries().size(), 1u);

  auto [model, fm] = unlink_model();
  auto im3 = image_classes(model);
  EXPECT_EQ(im3.theta_top, model.chain({"e0"}));
  EXPECT_EQ(im3.theta_bot, model.chain({"e1"}));
}

TEST(ThetaSupport, WorkedExamples) {
  auto [t, ft] = trefoil();
  EXPECT_TRUE(is_theta_supported(t, t.chain({"a"})));
  EXPECT_FALSE(is_theta_supported(t, t.chain({"c"})));
  EXPECT_FALSE(is_theta_supported(t, t.empty_chain()));
  EXPECT_THROW(is_theta_supported(t, t.chain({"b"})), PreconditionError);
  EXPECT_THROW(is_theta_supported(t, t.chain({"a", "c"})), PreconditionError);
  auto [model, fm] = unlink_model();
  EXPECT_TRUE(is_theta_star_supported(model, model.chain({"e1"})));
  EXPECT_FALSE(is_theta_star_supported(model, model.chain({"e0"})));
}

TEST(Tau, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 0 5"});
  EXPECT_EQ(tau_top(single, fs), 5);
  auto [t, ft] = trefoil();
  EXPECT_EQ(tau_top(t, ft), 1);
  EXPECT_EQ(tau_alpha(t, ft, t.chain({"a"})), 1);
  auto [model, fm] = unlink_model();
  EXPECT_EQ(tau_top(model, fm), 0);
  EXPECT_EQ(tau_bot(model, fm), 0);
  AlexanderFiltration broken{{1, 0, 1}};  // b -> c raises the level
  EXPECT_THROW(tau_top(t, broken), StructureError);
  EXPECT_THROW(tau_alpha(t, ft, t.chain({"b"})), PreconditionError);
}

TEST(Dual, WorkedExamples) {
  auto [single, fs] = parse_floer({"x 3 -2"});
  auto [ds, dfs] = dualize(single, fs);
  EXPECT_EQ(ds.grading(0), -3);
  EXPECT_EQ(dfs.level[0], 2);

  auto [t, ft] = trefoil();
  auto [dt, dft] = dualize(t, ft);
  EXPECT_TRUE(verify_axioms(dt).ok());
  EXPECT_EQ(correction_term(dt), 0);
  EXPECT_EQ(tau_bot(dt, dft), -1);

  auto [ddt, ddft] = dualize(dt, dft);
  EXPECT_EQ(ddt.gradings(), t.gradings());
  EXPECT_EQ(ddft.level, ft.level);
  ASSERT_EQ(ddt.entries().size(), t.entries().size());
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    EXPECT_EQ(ddt.entries()[i].source, t.entries()[i].source);
    EXPECT_EQ(ddt.entries()[i].target, t.entries()[i].target);
    EXPECT_EQ(ddt.entries()[i].power, t.entries()[i].power);
  }
}

TEST(Parse, FormatRoundTripAndErrors) {
  auto [t, ft] = trefoil();
  auto [again, fa] = parse_floer(format_floer(t, ft));
  EXPECT_EQ(format_floer(again, fa), format_floer(t, ft));
  EXPECT_THROW(parse_floer({"a 0"}), SchemaError);
  EXPECT_THROW(parse_floer({"a 0 x"}), SchemaError);
  EXPECT_THROW(parse_floer({"a 0 0", "a 2 0"}), SchemaError);
  EXPECT_THROW(parse_floer({"a 0 0", "a -> b"}), SchemaError);
  EXPECT_THROW(parse_floer({"a 0 0", "b 0 0", "a -> b"}), SchemaError);
  EXPECT_THROW(parse_floer({"a 0 0", "b 1 0", "b -> a pow"}), SchemaError);
  try {
    parse_floer({"# comment", "a 0 0", "bogus line here too"});
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(F2, KernelAndRank) {
  std::vector<Bits> vs{Bits(std::string("0011")), Bits(std::string("0110")), Bits(std::string("0101"))};
  EXPECT_EQ(f2_rank(vs, 4), 2u);
  F2Span span(4);
  span.insert(vs[0]);
  span.insert(vs[1]);
  EXPECT_TRUE(span.contains(vs[2]));
  EXPECT_EQ(span.dimension(), 2u);
}

// ---------------------------------------------------------------------------
// Random corpus
// ---------------------------------------------------------------------------

TEST(RandomCorpus, GeneratedComplexesSatisfyTheAxioms) {
  for (const auto& c : corpus(200, 100)) {
    auto [lib, f] = to_library(c);
    auto report = verify_axioms(lib);
    ASSERT_TRUE(report.ok()) << report.violations.front();
    EXPECT_NO_THROW(check_filtration(lib, f));
  }
}

TEST(RandomCorpus, HomologyMatchesTruncatedBruteForce) {
  std::size_t small = 0;
  for (const auto& c : corpus(400, 101)) {
    auto [lib, f] = to_library(c);
    auto h = homology_minus(lib);
    std::vector<int> towers;
    std::vector<std::pair<int, int>> torsion;
    for (const auto& t : h.towers) towers.push_back(t.grading);
    for (const auto& t : h.torsion) torsion.push_back({t.grading, t.power});
    EXPECT_EQ(towers.size(), std::size_t{1} << (c.ell - 1));
    const int top = lib.max_grading();
    for (int g = top - 16; g <= top + 1; ++g)
      ASSERT_EQ(oracle::homology_dimension(c, g), oracle::predicted_dimension(towers, torsion, g)) << "grading " << g;
    small += c.size() <= 5;
  }
  EXPECT_GT(small, 100u);
}

TEST(RandomCorpus, ThetaGradings) {
  for (const auto& c : corpus(200, 102)) {
    auto [lib, f] = to_library(c);
    auto im = image_classes(lib);
    EXPECT_EQ(homogeneous_grading(lib, im.theta_top), correction_term(lib));
    EXPECT_EQ(homogeneous_grading(lib, im.theta_bot), correction_term(lib) - lib.ell() + 1);
    EXPECT_TRUE(is_theta_supported(lib, im.theta_top));
    EXPECT_TRUE(is_theta_star_supported(lib, im.theta_bot));
  }
}

TEST(RandomCorpus, TauTopIsAtMostTauAlpha) {
  std::size_t checked = 0;
  for (const auto& c : corpus(200, 103)) {
    auto [lib, f] = to_library(c);
    const int top = tau_top(lib, f);
    const int bot = tau_bot(lib, f);
    auto im = image_classes(lib);
    // Every hat cycle of grading d (resp. d - l + 1) supported on at most 3 generators.
    for (int which = 0; which < 2; ++which) {
      const int g = which == 0 ? im.d : im.d - im.ell + 1;
      std::vector<std::size_t> at;
      for (std::size_t i = 0; i < lib.size(); ++i)
        if (lib.grading(i) == g) at.push_back(i);
      for (std::size_t mask = 1; mask < (std::size_t{1} << at.size()); ++mask) {
        Bits chain = lib.empty_chain();
        for (std::size_t j = 0; j < at.size(); ++j)
          if (mask >> j & 1) chain.set(at[j]);
        if (hat_boundary(lib, chain).any()) continue;
        bool supported = which == 0 ? is_theta_supported(lib, chain) : is_theta_star_supported(lib, chain);
        if (!supported) continue;
        EXPECT_LE(which == 0 ? top : bot, tau_alpha(lib, f, chain));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(RandomCorpus, MirrorProperty) {
  for (const auto& c : corpus(200, 104)) {
    auto [lib, f] = to_library(c);
    auto [dual, df] = dualize(lib, f);
    ASSERT_TRUE(verify_axioms(dual).ok());
    EXPECT_EQ(tau_top(lib, f), -tau_bot(dual, df)) << [&] {
      std::string s;
      for (const auto& line : format_floer(lib, f)) s += line + "\n";
      return s;
    }();
  }
}

TEST(RandomCorpus, GradingShiftEquivariance) {
  for (const auto& c : corpus(100, 105)) {
    auto [lib, f] = to_library(c);
    for (int k : {-2, 1, 3}) {
      FloerComplex shifted = shift_grading(lib, 2 * k);
      EXPECT_EQ(correction_term(shifted), correction_term(lib) + 2 * k);
      EXPECT_EQ(tau_top(shifted, f), tau_top(lib, f));
      EXPECT_EQ(tau_bot(shifted, f), tau_bot(lib, f));
    }
  }
}
