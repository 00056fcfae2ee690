#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "revlab/state.hpp"
#include "revlab/version.hpp"

namespace revlab {

using json = nlohmann::ordered_json;

namespace io {

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Atomic write: the payload lands under a temporary name and is renamed into
// place, so readers never observe a partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& payload) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// Profile CSV: header `x,re,im`, one row per sample, x strictly increasing in
// [0, 2*pi), 17 significant digits, LF line endings.
inline std::string profile_csv(const GridProfile& profile) {
  std::string out = "x,re,im\n";
  for (size_t k = 0; k < profile.N(); ++k) {
    out += format_g17(profile.x(k));
    out += ',';
    out += format_g17(profile.samples()[k].real());
    out += ',';
    out += format_g17(profile.samples()[k].imag());
    out += '\n';
  }
  return out;
}

inline void write_profile_csv(const std::filesystem::path& path, const GridProfile& profile) {
  write_file_atomic(path, profile_csv(profile));
}

// Reads a profile CSV back. The grid must be the uniform x_k = 2*pi*k/N mesh;
// anything else is rejected rather than silently resampled.
inline GridProfile read_profile_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "x,re,im")
    throw std::runtime_error(path.string() + ": expected header x,re,im");
  std::vector<double> xs;
  std::vector<cplx> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double x = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    if (!(row >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
    xs.push_back(x);
    samples.push_back({re, im});
  }
  const size_t N = samples.size();
  if (N < 2) throw std::runtime_error(path.string() + ": too few rows");
  for (size_t k = 0; k < N; ++k)
    if (std::abs(xs[k] - kTwoPi * static_cast<double>(k) / static_cast<double>(N)) > 1e-9)
      throw std::runtime_error(path.string() + ": x grid is not the uniform [0,2pi) mesh");
  return GridProfile(std::move(samples));
}

inline void write_json(const std::filesystem::path& path, const json& doc) {
  write_file_atomic(path, doc.dump(2) + "\n");
}

inline json manifest_root(const std::string& command) {
  json doc;
  doc["version"] = std::string(kVersion);
  doc["command"] = command;
  return doc;
}

}  // namespace io

}  // namespace revlab
