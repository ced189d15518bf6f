#pragma once

#include <stdexcept>
#include <string>

namespace qre {

/// Error categories surfaced by the library.
enum class errc {
  // fcidump parsing
  empty_file,
  malformed_header,
  malformed_record,
  non_numeric_value,
  index_out_of_range,
  // pauli algebra / mapping
  mismatched_width,
  non_hermitian_residue,
  empty_hamiltonian,
  // precision / counting formulas
  invalid_precision,
  invalid_probability,
  zero_gap,
  invalid_synthesis_error,
  // hardware profiles
  above_threshold,
  non_positive_cycle_time,
  // surface code
  invalid_distance,
  no_feasible_distance,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_file: return "empty_file";
    case errc::malformed_header: return "malformed_header";
    case errc::malformed_record: return "malformed_record";
    case errc::non_numeric_value: return "non_numeric_value";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::mismatched_width: return "mismatched_width";
    case errc::non_hermitian_residue: return "non_hermitian_residue";
    case errc::empty_hamiltonian: return "empty_hamiltonian";
    case errc::invalid_precision: return "invalid_precision";
    case errc::invalid_probability: return "invalid_probability";
    case errc::zero_gap: return "zero_gap";
    case errc::invalid_synthesis_error: return "invalid_synthesis_error";
    case errc::above_threshold: return "above_threshold";
    case errc::non_positive_cycle_time: return "non_positive_cycle_time";
    case errc::invalid_distance: return "invalid_distance";
    case errc::no_feasible_distance: return "no_feasible_distance";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse-level failure; carries the 1-based line number of the offending input.
class ParseError : public Error {
 public:
  ParseError(errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qre
