#pragma once

// JSON test-fixture format for grid states:
// {
//   "format": "qrf-fixture", "version": 1, "kind": "wavefunction",
//   "frame": "A",
//   "axes": [{"label": "B", "n": 128, "length": 20.0, "representation": "momentum"}, ...],
//   "amplitudes": "<base64 of little-endian float64 (re, im) pairs, row-major>"
// }

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrf/grid.hpp"

namespace qrf::fixture {

inline constexpr int kFormatVersion = 1;

std::string dump(const WaveFunction& psi, std::string_view kind = "wavefunction");
/// Parses a fixture; when `kind` is non-null it receives the "kind" field.
WaveFunction parse(std::string_view text, std::string* kind = nullptr);

void save(const std::filesystem::path& path, const WaveFunction& psi, std::string_view kind = "wavefunction");
WaveFunction load(const std::filesystem::path& path, std::string* kind = nullptr);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);
/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace qrf::fixture
