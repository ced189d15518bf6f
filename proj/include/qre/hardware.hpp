#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qre/errors.hpp"
#include "qre/numeric.hpp"

namespace qre {

/// Error-correction-relevant device parameters.
struct HardwareProfile {
  std::string name;
  double cycle_time = 0.0;  // seconds per surface-code cycle
  double p_phys = 0.0;      // physical error rate
};

struct SynthesisConfig {
  double eps_ss = 1e-9;  // synthesis error per rotation
};

/// T gates per arbitrary rotation at synthesis error eps_ss. Each rotation
/// compiles to an integer count, so the total is exactly linear in n_r.
inline std::uint64_t t_count(std::uint64_t n_r, double eps_ss) {
  if (!(eps_ss > 0.0 && eps_ss < 1.0))
    throw Error(errc::invalid_synthesis_error,
                "eps_ss must lie in (0,1), got " + std::to_string(eps_ss));
  const auto per_rotation =
      static_cast<std::uint64_t>(snap_ceil(10.0 + 12.0 * std::log2(1.0 / eps_ss)));
  return n_r * per_rotation;
}

/// Depth of one Trotter step: single-qubit rotations batch across the given
/// number of parallel lanes, CNOTs are counted fully sequential. Passing the
/// spatial-orbital count reproduces the d = n_r/n_o + n_c heuristic.
inline std::uint64_t logical_depth_per_step(std::uint64_t n_r, std::uint64_t n_c,
                                            std::uint64_t lanes) {
  if (lanes < 1) throw std::invalid_argument("depth lanes must be >= 1");
  return (n_r + lanes - 1) / lanes + n_c;
}

inline std::optional<HardwareProfile> builtin_profile(std::string_view name) {
  if (name == "superconducting") return HardwareProfile{"superconducting", 1e-6, 5e-4};
  if (name == "trapped_ion") return HardwareProfile{"trapped_ion", 7e-2, 3e-5};
  return std::nullopt;
}

/// Validates a profile record (built-in or user-supplied).
inline HardwareProfile load_profile(const HardwareProfile& record) {
  if (record.cycle_time <= 0.0)
    throw Error(errc::non_positive_cycle_time,
                record.name + ": cycle_time " + std::to_string(record.cycle_time));
  if (record.p_phys <= 0.0)
    throw Error(errc::invalid_probability,
                record.name + ": p_phys must be positive");
  if (record.p_phys >= 1e-2)
    throw Error(errc::above_threshold,
                record.name + ": p_phys " + std::to_string(record.p_phys) +
                    " is at or above the 1e-2 surface-code threshold");
  return record;
}

/// Key-value profile text: one "key = value" per line, keys name,
/// cycle_time_s, p_phys; '#' starts a comment.
inline HardwareProfile parse_profile_text(std::string_view text) {
  HardwareProfile record;
  bool have_cycle = false, have_p = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error(errc::malformed_record, "profile line lacks '=': " + line);
      if (end == text.size()) break;
      continue;
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      record.name = value;
    } else if (key == "cycle_time_s") {
      record.cycle_time = std::stod(value);
      have_cycle = true;
    } else if (key == "p_phys") {
      record.p_phys = std::stod(value);
      have_p = true;
    } else {
      throw Error(errc::malformed_record, "unknown profile key '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (record.name.empty() || !have_cycle || !have_p)
    throw Error(errc::malformed_record,
                "profile needs name, cycle_time_s, and p_phys");
  return load_profile(record);
}

}  // namespace qre
