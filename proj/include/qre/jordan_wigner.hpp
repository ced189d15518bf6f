#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qre/errors.hpp"
#include "qre/fcidump.hpp"
#include "qre/pauli.hpp"

namespace qre {

/// Hermitian qubit Hamiltonian: distinct Pauli strings with real coefficients.
/// The identity coefficient (plus the integral core energy) lives in
/// identity_offset and never appears in terms. Terms are sorted by descending
/// coefficient magnitude, ties broken by word order, so downstream per-step
/// costing is deterministic.
struct QubitHamiltonian {
  std::uint32_t n_qubits = 0;  // 2 * norb spin orbitals
  double identity_offset = 0.0;
  std::vector<PauliTerm> terms;
};

/// Jordan-Wigner image of a single ladder operator:
///   a_p   = Z_0...Z_{p-1} (X_p + iY_p)/2
///   a†_p  = Z_0...Z_{p-1} (X_p - iY_p)/2
/// Both returned strings have weight p+1.
inline std::vector<ComplexTerm> jordan_wigner_ladder(std::uint32_t p, bool dagger,
                                                     std::uint32_t n) {
  if (p >= n)
    throw Error(errc::index_out_of_range, "spin orbital " + std::to_string(p) +
                                              " outside register of " +
                                              std::to_string(n) + " qubits");
  std::vector<std::pair<std::uint32_t, Axis>> chain;
  chain.reserve(p + 1);
  for (std::uint32_t q = 0; q < p; ++q) chain.emplace_back(q, Axis::Z);

  auto with_end = [&](Axis end) {
    auto ops = chain;
    ops.emplace_back(p, end);
    return PauliString(n, std::move(ops));
  };
  std::complex<double> y_coeff(0.0, dagger ? -0.5 : 0.5);
  return {{std::complex<double>(0.5, 0.0), with_end(Axis::X)},
          {y_coeff, with_end(Axis::Y)}};
}

namespace detail {

using PauliAccumulator =
    std::unordered_map<PauliString, std::complex<double>, PauliStringHash>;

/// coeff * a†_c a_a, expanded and folded into the accumulator.
inline void accumulate_excitation(PauliAccumulator& acc, double coeff, std::uint32_t c,
                                  std::uint32_t a, std::uint32_t n) {
  auto left = jordan_wigner_ladder(c, true, n);
  auto right = jordan_wigner_ladder(a, false, n);
  for (const auto& l : left) {
    for (const auto& r : right) {
      auto [phase, s] = multiply(l.string, r.string);
      acc[std::move(s)] += coeff * l.coefficient * r.coefficient * phase;
    }
  }
}

/// coeff * a†_c1 a†_c2 a_a1 a_a2. Monomials with a repeated creator or
/// annihilator vanish identically and are skipped.
inline void accumulate_double(PauliAccumulator& acc, double coeff, std::uint32_t c1,
                              std::uint32_t c2, std::uint32_t a1, std::uint32_t a2,
                              std::uint32_t n) {
  if (c1 == c2 || a1 == a2) return;
  auto f1 = jordan_wigner_ladder(c1, true, n);
  auto f2 = jordan_wigner_ladder(c2, true, n);
  auto f3 = jordan_wigner_ladder(a1, false, n);
  auto f4 = jordan_wigner_ladder(a2, false, n);
  for (const auto& t1 : f1) {
    for (const auto& t2 : f2) {
      auto [p12, s12] = multiply(t1.string, t2.string);
      auto c12 = t1.coefficient * t2.coefficient * p12;
      for (const auto& t3 : f3) {
        auto [p123, s123] = multiply(s12, t3.string);
        auto c123 = c12 * t3.coefficient * p123;
        for (const auto& t4 : f4) {
          auto [p, s] = multiply(s123, t4.string);
          acc[std::move(s)] += coeff * c123 * t4.coefficient * p;
        }
      }
    }
  }
}

/// The distinct index tuples in the 8-fold symmetry orbit of one canonical
/// two-body entry (i,j,k,l).
inline std::vector<std::array<std::uint32_t, 4>> symmetry_orbit(std::uint32_t i,
                                                                std::uint32_t j,
                                                                std::uint32_t k,
                                                                std::uint32_t l) {
  std::array<std::array<std::uint32_t, 4>, 8> images = {{{i, j, k, l},
                                                         {j, i, k, l},
                                                         {i, j, l, k},
                                                         {j, i, l, k},
                                                         {k, l, i, j},
                                                         {l, k, i, j},
                                                         {k, l, j, i},
                                                         {l, k, j, i}}};
  std::vector<std::array<std::uint32_t, 4>> distinct;
  for (const auto& im : images) {
    bool seen = false;
    for (const auto& d : distinct)
      if (d == im) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(im);
  }
  return distinct;
}

}  // namespace detail

/// Maps spatial integrals onto 2*norb qubits. Spin orbitals interleave:
/// 2p is orbital p spin-up, 2p+1 spin-down. The assembled operator is
///   sum_pq h_pq a†_p a_q + 1/2 sum_pqrs (pq|rs) a†_{p,s1} a†_{r,s2} a_{s,s2} a_{q,s1}
/// over spin orbitals, plus core_energy into identity_offset.
inline QubitHamiltonian map_hamiltonian(const FcidumpData& data,
                                        double drop_threshold = 1e-10) {
  const auto n = static_cast<std::uint32_t>(2 * data.norb);
  detail::PauliAccumulator acc;

  for (const auto& [key, h] : data.one_body) {
    auto pq = detail::unpack2(key);
    std::vector<std::array<std::uint32_t, 2>> pairs = {{pq[0], pq[1]}};
    if (pq[0] != pq[1]) pairs.push_back({pq[1], pq[0]});
    for (const auto& [p, q] : pairs)
      for (std::uint32_t sigma = 0; sigma < 2; ++sigma)
        detail::accumulate_excitation(acc, h, 2 * p + sigma, 2 * q + sigma, n);
  }

  for (const auto& [key, g] : data.two_body) {
    auto x = detail::unpack4(key);
    for (const auto& [p, q, r, s] : detail::symmetry_orbit(x[0], x[1], x[2], x[3])) {
      for (std::uint32_t sigma = 0; sigma < 2; ++sigma)
        for (std::uint32_t tau = 0; tau < 2; ++tau)
          detail::accumulate_double(acc, 0.5 * g, 2 * p + sigma, 2 * r + tau,
                                    2 * s + tau, 2 * q + sigma, n);
    }
  }

  QubitHamiltonian ham;
  ham.n_qubits = n;
  ham.identity_offset = data.core_energy;
  for (auto& [string, coeff] : acc) {
    if (std::abs(coeff.imag()) > 1e-10)
      throw Error(errc::non_hermitian_residue,
                  "imaginary coefficient " + std::to_string(coeff.imag()) + " on " +
                      string.to_word());
    double value = coeff.real();
    if (string.is_identity()) {
      ham.identity_offset += value;
      continue;
    }
    if (std::abs(value) >= drop_threshold)
      ham.terms.push_back({value, string});
  }
  if (ham.terms.empty())
    throw Error(errc::empty_hamiltonian, "no non-identity terms survive mapping");

  std::sort(ham.terms.begin(), ham.terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    double ma = std::abs(a.coefficient), mb = std::abs(b.coefficient);
    if (ma != mb) return ma > mb;
    return compare_words(a.string, b.string) < 0;
  });
  return ham;
}

/// One term per line, "coeff  pauli-word". The identity offset is written
/// first with the word "I" so external tools see the full operator.
inline std::string serialize_terms(const QubitHamiltonian& ham) {
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", ham.identity_offset);
  out += buf;
  out += "  I\n";
  for (const auto& term : ham.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g", term.coefficient);
    out += buf;
    out += "  ";
    out += term.string.to_word();
    out += "\n";
  }
  return out;
}

}  // namespace qre
