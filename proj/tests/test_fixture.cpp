#include <gtest/gtest.h>

#include <filesystem>

#include "json.hpp"
#include "qrf/dirac.hpp"
#include "qrf/fixture.hpp"
#include "support.hpp"

using namespace qrf;
using qrf::testing::Gen;
using qrf::testing::position_axes;

TEST(Fixture, Base64) {
  const std::vector<std::uint8_t> bytes{'f', 'o', 'o', 'b', 'a'};
  EXPECT_EQ(fixture::base64_encode(bytes), "Zm9vYmE=");
  EXPECT_EQ(fixture::base64_decode("Zm9vYmE="), bytes);
  EXPECT_EQ(fixture::base64_encode({}), "");
}

TEST(Fixture, Sha256) {
  EXPECT_EQ(fixture::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Fixture, RoundTripIsBitExact) {
  Gen gen(30);
  const Grid1D g(32, 12.5);
  auto psi = gen.state(frames::A, position_axes({frames::B, frames::C}, g));
  psi = change_representation(psi, frames::C, Representation::momentum);
  std::string kind;
  const auto back = fixture::parse(fixture::dump(psi), &kind);
  EXPECT_EQ(kind, "wavefunction");
  EXPECT_EQ(back.frame(), psi.frame());
  EXPECT_EQ(back.axes(), psi.axes());
  for (std::size_t i = 0; i < psi.size(); ++i) EXPECT_EQ(back[i], psi[i]);
}

TEST(Fixture, Layout) {
  const Grid1D g(8, 2.0);
  WaveFunction psi(frames::C, position_axes({frames::A}, g));
  psi[0] = cplx(1.0, 0.0);
  const auto j = nlohmann::json::parse(fixture::dump(psi));
  EXPECT_EQ(j["format"], "qrf-fixture");
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["frame"], "C");
  EXPECT_EQ(j["axes"][0]["label"], "A");
  EXPECT_EQ(j["axes"][0]["n"], 8);
  EXPECT_EQ(j["axes"][0]["representation"], "position");
  const auto raw = fixture::base64_decode(j["amplitudes"].get<std::string>());
  ASSERT_EQ(raw.size(), 8u * 16u);
  // 1.0 as little-endian float64
  EXPECT_EQ(raw[6], 0xF0);
  EXPECT_EQ(raw[7], 0x3F);
}

TEST(Fixture, RejectsMalformed) {
  EXPECT_THROW(fixture::parse("{}"), InvalidArgument);
  EXPECT_THROW(fixture::parse("not json"), InvalidArgument);
}

TEST(Fixture, FileAndPhysicalState) {
  Gen gen(31);
  const Grid1D g(16, 8.0);
  const auto psi = gen.state(frames::A, position_axes({frames::B, frames::C}, g));
  const auto path = std::filesystem::temp_directory_path() / "qrf_fixture_test.json";
  fixture::save(path, psi);
  EXPECT_GE(fidelity(fixture::load(path), psi), 1 - 1e-15);
  std::filesystem::remove(path);

  const dirac::PhysicalState s(psi);
  const auto back = dirac::parse_physical_state(dirac::dump(s));
  EXPECT_EQ(back.frame(), frames::A);
  EXPECT_GE(fidelity(back.canonical(), s.canonical()), 1 - 1e-15);
  EXPECT_THROW(dirac::parse_physical_state(fixture::dump(psi)), InvalidArgument);
}
