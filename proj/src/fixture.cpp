#include "qrf/fixture.hpp"

#include <openssl/evp.h>

#include <bit>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qrf::fixture {

namespace {

void put_le(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
}

double get_le(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return std::bit_cast<double>(bits);
}

Representation parse_rep(const std::string& s) {
  if (s == "position") return Representation::position;
  if (s == "momentum") return Representation::momentum;
  throw InvalidArgument("unknown representation '" + s + "'");
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
  const int len = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(),
                                  static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(len));
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw InvalidArgument("base64 payload length is not a multiple of 4");
  std::vector<std::uint8_t> out(3 * text.size() / 4 + 1);
  const int len = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                  static_cast<int>(text.size()));
  if (len < 0) throw InvalidArgument("malformed base64 payload");
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(len) - pad);
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericalFailure("sha256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::string dump(const WaveFunction& psi, std::string_view kind) {
  nlohmann::ordered_json j;
  j["format"] = "qrf-fixture";
  j["version"] = kFormatVersion;
  j["kind"] = std::string(kind);
  j["frame"] = psi.frame().name();
  auto axes = nlohmann::ordered_json::array();
  for (const auto& a : psi.axes()) {
    nlohmann::ordered_json ax;
    ax["label"] = a.label.name();
    ax["n"] = a.grid.n;
    ax["length"] = a.grid.length;
    ax["representation"] = to_string(a.rep);
    axes.push_back(ax);
  }
  j["axes"] = axes;
  std::vector<std::uint8_t> bytes;
  bytes.reserve(psi.size() * 16);
  for (const auto& z : psi.amplitudes()) {
    put_le(bytes, z.real());
    put_le(bytes, z.imag());
  }
  j["amplitudes"] = base64_encode(bytes);
  return j.dump(2) + "\n";
}

WaveFunction parse(std::string_view text, std::string* kind) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("fixture is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "qrf-fixture") throw InvalidArgument("not a qrf fixture");
    if (j.at("version").get<int>() != kFormatVersion) throw InvalidArgument("unsupported fixture version");
    if (kind) *kind = j.value("kind", std::string("wavefunction"));
    const FrameLabel frame = FrameLabel::from_name(j.at("frame").get<std::string>());
    std::vector<Axis> axes;
    for (const auto& ax : j.at("axes")) {
      axes.push_back(Axis{FrameLabel::from_name(ax.at("label").get<std::string>()),
                          Grid1D(ax.at("n").get<std::size_t>(), ax.at("length").get<double>()),
                          parse_rep(ax.at("representation").get<std::string>())});
    }
    const auto bytes = base64_decode(j.at("amplitudes").get<std::string>());
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.grid.n;
    if (bytes.size() != total * 16) throw InvalidArgument("fixture amplitude payload has the wrong size");
    std::vector<cplx> data(total);
    for (std::size_t i = 0; i < total; ++i) data[i] = cplx(get_le(&bytes[16 * i]), get_le(&bytes[16 * i + 8]));
    return WaveFunction(frame, std::move(axes), std::move(data));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed fixture: ") + e.what());
  }
}

void save(const std::filesystem::path& path, const WaveFunction& psi, std::string_view kind) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write fixture " + path.string());
  out << dump(psi, kind);
}

WaveFunction load(const std::filesystem::path& path, std::string* kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read fixture " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), kind);
}

}  // namespace qrf::fixture
