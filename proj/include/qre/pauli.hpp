#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

/// Non-identity single-qubit Pauli axis. Identity is the absence of an entry.
enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

inline char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

/// Sparse Pauli word on a fixed register width. Entries are kept sorted by
/// qubit index; qubits without an entry act as identity.
struct PauliString {
  std::uint32_t n_qubits = 1;
  std::vector<std::pair<std::uint32_t, Axis>> ops;

  PauliString() = default;

  explicit PauliString(std::uint32_t width) : n_qubits(width) {}

  PauliString(std::uint32_t width,
              std::initializer_list<std::pair<std::uint32_t, Axis>> entries)
      : n_qubits(width), ops(entries) {
    normalize();
  }

  PauliString(std::uint32_t width, std::vector<std::pair<std::uint32_t, Axis>> entries)
      : n_qubits(width), ops(std::move(entries)) {
    normalize();
  }

  std::size_t weight() const { return ops.size(); }
  bool is_identity() const { return ops.empty(); }

  /// Counts entries on each axis; used for per-term gate costing.
  std::size_t count(Axis a) const {
    std::size_t n = 0;
    for (const auto& [q, axis] : ops)
      if (axis == a) ++n;
    return n;
  }

  /// "X0 Z1 X2" for non-identity strings, "I" for the identity.
  std::string to_word() const {
    if (ops.empty()) return "I";
    std::string out;
    for (const auto& [q, axis] : ops) {
      if (!out.empty()) out.push_back(' ');
      out.push_back(axis_char(axis));
      out += std::to_string(q);
    }
    return out;
  }

  bool operator==(const PauliString& other) const {
    return n_qubits == other.n_qubits && ops == other.ops;
  }

 private:
  void normalize() {
    std::sort(ops.begin(), ops.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].first >= n_qubits)
        throw Error(errc::index_out_of_range,
                    "qubit " + std::to_string(ops[i].first) + " outside width " +
                        std::to_string(n_qubits));
      if (i > 0 && ops[i].first == ops[i - 1].first)
        throw Error(errc::index_out_of_range,
                    "duplicate entry for qubit " + std::to_string(ops[i].first));
    }
  }
};

/// Lexicographic order over the sparse entry sequence: earlier qubit first,
/// then X < Y < Z, shorter word on a tie ("X0" < "X0 Z1" < "Z1").
/// Returns negative, zero, or positive like strcmp.
inline int compare_words(const PauliString& a, const PauliString& b) {
  const std::size_t common = std::min(a.ops.size(), b.ops.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.ops[i].first != b.ops[i].first)
      return a.ops[i].first < b.ops[i].first ? -1 : 1;
    auto ra = static_cast<int>(a.ops[i].second);
    auto rb = static_cast<int>(b.ops[i].second);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.ops.size() != b.ops.size()) return a.ops.size() < b.ops.size() ? -1 : 1;
  if (a.n_qubits != b.n_qubits) return a.n_qubits < b.n_qubits ? -1 : 1;
  return 0;
}

struct PauliStringHash {
  std::size_t operator()(const PauliString& s) const {
    std::uint64_t h = 1469598103934665603ull ^ s.n_qubits;
    for (const auto& [q, axis] : s.ops) {
      h ^= (static_cast<std::uint64_t>(q) << 8) | static_cast<std::uint64_t>(axis);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Index-wise Pauli product. The phase is always one of {+1, -1, +i, -i}.
inline std::pair<std::complex<double>, PauliString> multiply(const PauliString& a,
                                                             const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw Error(errc::mismatched_width,
                std::to_string(a.n_qubits) + " vs " + std::to_string(b.n_qubits));

  // product_axis[x][y] and i-exponent quarter_turns[x][y], x,y in {I,X,Y,Z}.
  static constexpr std::uint8_t product_axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr std::uint8_t quarter_turns[4][4] = {
      {0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};

  PauliString out(a.n_qubits);
  out.ops.reserve(a.ops.size() + b.ops.size());
  int turns = 0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.ops.size() || ib < b.ops.size()) {
    std::uint32_t qa = ia < a.ops.size() ? a.ops[ia].first : UINT32_MAX;
    std::uint32_t qb = ib < b.ops.size() ? b.ops[ib].first : UINT32_MAX;
    std::uint32_t q = std::min(qa, qb);
    int x = qa == q ? static_cast<int>(a.ops[ia++].second) : 0;
    int y = qb == q ? static_cast<int>(b.ops[ib++].second) : 0;
    turns += quarter_turns[x][y];
    if (std::uint8_t axis = product_axis[x][y]; axis != 0)
      out.ops.emplace_back(q, static_cast<Axis>(axis));
  }
  static const std::complex<double> unit[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return {unit[turns % 4], out};
}

/// Real-coefficient term of a Hermitian qubit Hamiltonian.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// Intermediate term with a complex coefficient (ladder-operator expansions).
struct ComplexTerm {
  std::complex<double> coefficient;
  PauliString string;
};

}  // namespace qre
