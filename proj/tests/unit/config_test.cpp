#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "eamsim/cli/config.hpp"
#include "oracle.hpp"

using namespace eamsim;
using namespace eamsim::cli;

namespace {

// Runs `fn`, expecting a ConfigError, and returns it for inspection.
template <class Fn>
ConfigError config_error(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no ConfigError thrown";
  return ConfigError("none");
}

}  // namespace

TEST(KeyValueFile, ParsesCommentsAndWhitespace) {
  const auto file = KeyValueFile::parse("# header\n\n  delta1 = 1.25  # trailing\nM=(0.1,-0.2)\r\n");
  ASSERT_EQ(file.entries().size(), 2u);
  EXPECT_EQ(file.get("delta1"), "1.25");
  EXPECT_EQ(file.find("delta1")->line, 3);
  EXPECT_EQ(file.get("M"), "(0.1,-0.2)");
  EXPECT_EQ(file.find("M")->line, 4);
  EXPECT_FALSE(file.get("tau1").has_value());
}

TEST(KeyValueFile, ReportsLineAndField) {
  auto e = config_error([] { KeyValueFile::parse("delta1 = 1\nnot a pair\n"); });
  EXPECT_EQ(e.line(), 2);
  e = config_error([] { KeyValueFile::parse("M = \n"); });
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.field(), "M");
  e = config_error([] { KeyValueFile::parse("M = 1\n\nM = 2\n"); });
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.field(), "M");
  EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  e = config_error([] { KeyValueFile::parse("bad key = 1\n"); });
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(std::string(e.what()).rfind("line 1: ", 0), 0u);
}

TEST(KeyValueFile, SerializeParseIsIdempotent) {
  const auto first = KeyValueFile::parse("  a=1\n# c\nb_2 =   (1,2) \n\nc = resonant\n");
  const std::string once = first.serialize();
  EXPECT_EQ(once, "a = 1\nb_2 = (1,2)\nc = resonant\n");
  EXPECT_EQ(KeyValueFile::parse(once).serialize(), once);
}

TEST(KeyValueFile, LoadMissingFileFails) {
  EXPECT_THROW(KeyValueFile::load("/nonexistent/eamsim.cfg"), ConfigError);
}

TEST(Overrides, ReplaceOrAppend) {
  auto file = KeyValueFile::parse("M = 0.01\n");
  apply_override(file, "M=0.02");
  apply_override(file, " gamma = 1.01 ");
  EXPECT_EQ(file.get("M"), "0.02");
  EXPECT_EQ(file.get("gamma"), "1.01");
  EXPECT_EQ(file.entries().front().key, "M");
  EXPECT_THROW(apply_override(file, "gamma"), ConfigError);
  EXPECT_THROW(apply_override(file, "=1"), ConfigError);
  EXPECT_THROW(apply_override(file, "gamma="), ConfigError);
}

TEST(ScenarioKinds, NamesRoundTrip) {
  ASSERT_EQ(all_scenario_kinds().size(), 5u);
  for (const auto kind : all_scenario_kinds()) EXPECT_EQ(parse_scenario_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_scenario_kind("triads").has_value());
  EXPECT_EQ(parse_scenario_kind("entropy-map"), ScenarioKind::entropy_map);
}

TEST(ResolveConfig, DefaultsBuildValidSpecs) {
  for (const auto kind : all_scenario_kinds()) {
    const auto c = resolve_config(kind, KeyValueFile{});
    EXPECT_EQ(c, default_config(kind));
    EXPECT_EQ(c.kind, kind);
  }
  const auto triad = resolve_config(ScenarioKind::triad, KeyValueFile{});
  EXPECT_NEAR(mode_energy(triad.triad().acceptor(), EamLabel(1, 3)), 1.0, 1e-15);
  EXPECT_NEAR(triad.resolved_donor_delta(), 1.8, 1e-15);
  const auto five = resolve_config(ScenarioKind::five_arm, KeyValueFile{});
  EXPECT_EQ(five.arm_count, 5);
  EXPECT_NEAR(five.resolved_donor_delta(), 2.0 * (1.0 - 1.0 / 15.0) - 0.1, 1e-15);
  const auto chain = resolve_config(ScenarioKind::chain, KeyValueFile{});
  EXPECT_NEAR(mode_energy(chain.triad().acceptor(), EamLabel(1, 3)), 0.5, 1e-15);
  EXPECT_EQ(chain.chain().site_count(), 121);
}

TEST(ResolveConfig, ReadsTypedValues) {
  const auto c = resolve_config(ScenarioKind::triad,
                                KeyValueFile::parse("delta0 = 1.7\ntau1 = (0.1,0.05)\nM = +0.02\nsamples = 11\n"));
  ASSERT_TRUE(c.donor_delta.has_value());
  EXPECT_EQ(*c.donor_delta, 1.7);
  EXPECT_EQ(c.acceptor_tau, Complex(0.1, 0.05));
  EXPECT_EQ(c.qc_element, Complex(0.02));
  EXPECT_EQ(c.samples, 11);
  const auto resonant = resolve_config(ScenarioKind::triad, KeyValueFile::parse("delta0 = resonant\n"));
  EXPECT_FALSE(resonant.donor_delta.has_value());
  const auto chain = resolve_config(ScenarioKind::chain, KeyValueFile::parse("g_chain = (0,0.1)\nL = 4\n"));
  EXPECT_EQ(chain.chain_coupling, Complex(0.0, 0.1));
  EXPECT_EQ(chain.chain().donor_coupling(), Complex(0.0, 0.1));
  const auto chain_default = resolve_config(ScenarioKind::chain, KeyValueFile::parse("g_chain = default\n"));
  EXPECT_FALSE(chain_default.chain_coupling.has_value());
  EXPECT_NEAR(std::abs(chain_default.chain().donor_coupling()), std::sqrt(2.0 / 3.0) / 6.0, 1e-15);
}

TEST(ResolveConfig, RejectsBadInput) {
  struct Case {
    ScenarioKind kind;
    const char* text;
    const char* field;
    int line;
  };
  const Case cases[] = {
      {ScenarioKind::triad, "M = 0.01\neta = 1\n", "eta", 2},
      {ScenarioKind::selection_table, "gamma = 1\n", "gamma", 1},
      {ScenarioKind::triad, "arm_count = 5\n", "arm_count", 1},
      {ScenarioKind::five_arm, "\narm_count = 3\n", "arm_count", 2},
      {ScenarioKind::selection_table, "arm_count = 4\n", "arm_count", 1},
      {ScenarioKind::triad, "samples = 1\n", "samples", 1},
      {ScenarioKind::triad, "samples = 2.5\n", "samples", 1},
      {ScenarioKind::triad, "t_max = -3\n", "t_max", 1},
      {ScenarioKind::triad, "M = abc\n", "M", 1},
      {ScenarioKind::triad, "M = (1,\n", "M", 1},
      {ScenarioKind::triad, "delta0 = nan\n", "delta0", 1},
      {ScenarioKind::triad, "gamma = inf\n", "gamma", 1},
      {ScenarioKind::entropy_map, "gamma_min = 1.1\ngamma_max = 1.0\n", "gamma_max", 2},
      {ScenarioKind::entropy_map, "gamma_samples = 1\n", "gamma_samples", 1},
      {ScenarioKind::chain, "L = 0\n", "L", 1},
      {ScenarioKind::chain, "front_threshold = 1\n", "front_threshold", 1},
  };
  for (const auto& c : cases) {
    const auto e = config_error([&] { resolve_config(c.kind, KeyValueFile::parse(c.text)); });
    EXPECT_EQ(e.field(), c.field) << c.text;
    EXPECT_EQ(e.line(), c.line) << c.text;
  }
  // Invariants enforced by the model itself also surface as configuration errors.
  EXPECT_THROW(resolve_config(ScenarioKind::triad, KeyValueFile::parse("gamma = 0\n")), ConfigError);
}

TEST(ResolveConfig, RoundTripsThroughKeyValues) {
  oracle::Sampler sampler(17);
  for (const auto kind : all_scenario_kinds()) {
    for (int trial = 0; trial < 20; ++trial) {
      KeyValueFile file;
      if (kind != ScenarioKind::selection_table) {
        file.set("t_max", cli::format_number(sampler.uniform(1.0, 100.0)));
        file.set("samples", std::to_string(sampler.integer(2, 50)));
        file.set("delta1", cli::format_number(sampler.uniform(0.5, 2.0)));
        file.set("tau1", cli::format_complex(sampler.phase_complex(0.0, 0.2)));
      }
      file.set("M", cli::format_complex(sampler.phase_complex(0.0, 0.1)));
      if (kind == ScenarioKind::triad || kind == ScenarioKind::five_arm) {
        file.set("delta0", trial % 2 ? "resonant" : cli::format_number(sampler.uniform(1.0, 3.0)));
        file.set("gamma", cli::format_number(sampler.uniform(0.9, 1.1)));
      }
      if (kind == ScenarioKind::chain) {
        file.set("L", std::to_string(sampler.integer(1, 9)));
        file.set("g_chain", trial % 2 ? "default" : cli::format_number(sampler.uniform(0.0, 0.3)));
        file.set("eta", cli::format_complex(sampler.phase_complex(0.5, 1.5)));
      }
      if (kind == ScenarioKind::selection_table) file.set("arm_count", std::to_string(2 * sampler.integer(1, 6) + 1));
      const ScenarioConfig c = resolve_config(kind, file);
      const KeyValueFile canonical = to_key_values(c);
      EXPECT_EQ(resolve_config(kind, canonical), c);
      EXPECT_EQ(to_key_values(resolve_config(kind, KeyValueFile::parse(canonical.serialize()))).serialize(),
                canonical.serialize());
    }
  }
}

TEST(FormatNumber, ShortestRoundTrip) {
  oracle::Sampler sampler(2);
  EXPECT_EQ(cli::format_number(0.1), "0.1");
  EXPECT_EQ(cli::format_number(1200.0), "1200");
  EXPECT_EQ(format_complex(Complex(0.5, -0.25)), "(0.5,-0.25)");
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = sampler.uniform(-1e3, 1e3) * std::pow(10.0, sampler.integer(-12, 12));
    EXPECT_EQ(std::stod(cli::format_number(x)), x);
  }
}
