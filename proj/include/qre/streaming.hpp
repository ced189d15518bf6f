#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qre/errors.hpp"
#include "qre/fcidump.hpp"
#include "qre/pauli.hpp"
#include "qre/trotter.hpp"

namespace qre {

/// Gate tally of the mapped Hamiltonian computed without materializing the
/// term list. Matches map_hamiltonian + single_step_cost on the same input.
struct HamiltonianTally {
  std::uint32_t n_qubits = 0;
  double identity_offset = 0.0;
  TrotterStepCost step;  // step.n_r equals the surviving term count
};

namespace detail {

/// One ladder operator in a fermionic monomial, multiplication order.
struct Ladder {
  std::uint32_t site;
  bool dagger;
};

/// Jordan-Wigner image of a ladder monomial, restricted to its support.
/// Strings live on a compressed register whose qubit k is support[k]; the
/// Z blocks over non-support sites are summarized per gap: region k covers
/// the full-register sites strictly between support[k-1] and support[k]
/// (region 0 covers everything below support[0]), and a set bit in
/// region_mask means the whole gap carries Z. The gap pattern is common to
/// every expanded string because it depends only on the factor sites.
struct MonomialExpansion {
  std::vector<std::uint32_t> support;  // sorted distinct sites
  unsigned region_mask = 0;
  std::vector<ComplexTerm> terms;
};

inline MonomialExpansion expand_monomial(std::complex<double> coeff,
                                         const Ladder* ops, int count) {
  MonomialExpansion out;
  out.support.reserve(count);
  for (int i = 0; i < count; ++i) out.support.push_back(ops[i].site);
  std::sort(out.support.begin(), out.support.end());
  out.support.erase(std::unique(out.support.begin(), out.support.end()),
                    out.support.end());
  const auto width = static_cast<std::uint32_t>(out.support.size());

  out.terms.push_back({coeff, PauliString(width)});
  for (int i = 0; i < count; ++i) {
    const auto k = static_cast<std::uint32_t>(
        std::lower_bound(out.support.begin(), out.support.end(), ops[i].site) -
        out.support.begin());
    out.region_mask ^= (1u << (k + 1)) - 1u;

    std::vector<std::pair<std::uint32_t, Axis>> x_ops, y_ops;
    x_ops.reserve(k + 1);
    for (std::uint32_t j = 0; j < k; ++j) x_ops.emplace_back(j, Axis::Z);
    y_ops = x_ops;
    x_ops.emplace_back(k, Axis::X);
    y_ops.emplace_back(k, Axis::Y);
    const ComplexTerm fx{{0.5, 0.0}, PauliString(width, std::move(x_ops))};
    const ComplexTerm fy{{0.0, ops[i].dagger ? -0.5 : 0.5},
                         PauliString(width, std::move(y_ops))};

    std::vector<ComplexTerm> next;
    next.reserve(out.terms.size() * 2);
    for (const auto& t : out.terms) {
      for (const ComplexTerm* f : {&fx, &fy}) {
        auto [phase, s] = multiply(t.string, f->string);
        next.push_back({t.coefficient * f->coefficient * phase, std::move(s)});
      }
    }
    out.terms = std::move(next);
  }
  return out;
}

/// Running totals; take() applies the hermiticity residue check and the
/// coefficient threshold exactly as the term-materializing path does.
struct TallySums {
  double threshold = 1e-10;
  std::uint64_t n_r = 0;
  std::uint64_t n_c = 0;
  std::uint64_t n_cliff = 0;
  double offset = 0.0;

  void take(std::complex<double> coeff, std::uint64_t weight,
            std::uint64_t basis_ops) {
    if (std::abs(coeff.imag()) > 1e-10)
      throw Error(errc::non_hermitian_residue,
                  "imaginary coefficient " + std::to_string(coeff.imag()) +
                      " in streamed tally");
    if (std::abs(coeff.real()) < threshold) return;
    ++n_r;
    n_c += 2 * (weight - 1);
    n_cliff += 2 * basis_ops;
  }
};

/// Accumulates the purely diagonal strings (Z sets of size 0..2).
class DiagonalSlots {
 public:
  void add(const MonomialExpansion& ex) {
    if (ex.region_mask != 0)
      throw std::logic_error("diagonal monomial left a Z block over a gap");
    for (const auto& t : ex.terms) {
      std::uint64_t key = 0;
      for (const auto& [k, axis] : t.string.ops) {
        if (axis != Axis::Z)
          throw std::logic_error("diagonal monomial produced an X/Y factor");
        key = (key << 32) | (ex.support[k] + 1ull);
      }
      slots_[key] += t.coefficient;
    }
  }

  void flush(TallySums& sums) {
    for (const auto& [key, coeff] : slots_) {
      if (key == 0) {
        if (std::abs(coeff.imag()) > 1e-10)
          throw Error(errc::non_hermitian_residue,
                      "imaginary identity coefficient in streamed tally");
        sums.offset += coeff.real();  // identity bypasses the threshold
        continue;
      }
      const std::uint64_t weight = (key >> 32) ? 2 : 1;
      sums.take(coeff, weight, 0);
    }
    slots_.clear();
  }

 private:
  std::unordered_map<std::uint64_t, std::complex<double>> slots_;
};

/// Accumulates one single-excitation unit: strings with X/Y exactly on the
/// endpoint pair (m, n). Every string is the bare hop word (Z chain filling
/// the open interval) with at most one site toggled by a density dressing.
class HopSlots {
 public:
  HopSlots(std::uint32_t m, std::uint32_t n) : m_(m), n_(n) {}

  void add(const MonomialExpansion& ex) {
    const auto im = index_of(ex, m_);
    const auto in = index_of(ex, n_);
    const unsigned expected =
        ((1u << (in + 1)) - 1u) ^ ((1u << (im + 1)) - 1u);
    if (ex.region_mask != expected)
      throw std::logic_error("hop monomial left an unexpected gap pattern");

    for (const auto& t : ex.terms) {
      int ax_m = -1, ax_n = -1;
      std::uint64_t toggle = 0;  // site + 1, or 0 for the bare chain
      for (const auto& [k, axis] : t.string.ops) {
        if (k == im) {
          ax_m = axis_bit(axis);
        } else if (k == in) {
          ax_n = axis_bit(axis);
        } else {
          if (axis != Axis::Z)
            throw std::logic_error("hop dressing produced an X/Y factor");
          const std::uint32_t site = ex.support[k];
          if (!(m_ < site && site < n_)) toggle = mark_toggle(toggle, site);
        }
      }
      if (ax_m < 0 || ax_n < 0)
        throw std::logic_error("hop monomial lost an endpoint factor");
      // A dressing site inside the chain toggles by *omitting* its Z.
      for (std::uint32_t k = 0; k < ex.support.size(); ++k) {
        const std::uint32_t site = ex.support[k];
        if (k == im || k == in || !(m_ < site && site < n_)) continue;
        bool has_z = false;
        for (const auto& [kk, axis] : t.string.ops)
          if (kk == k) has_z = true;
        if (!has_z) toggle = mark_toggle(toggle, site);
      }
      const std::uint64_t key =
          static_cast<std::uint64_t>(ax_m) |
          (static_cast<std::uint64_t>(ax_n) << 1) | (toggle << 2);
      slots_[key] += t.coefficient;
    }
  }

  void flush(TallySums& sums) {
    const std::uint64_t gap = n_ - m_ - 1;
    for (const auto& [key, coeff] : slots_) {
      std::uint64_t weight = 2 + gap;
      if (const std::uint64_t toggle = key >> 2; toggle != 0) {
        const std::uint32_t site = static_cast<std::uint32_t>(toggle - 1);
        weight += (m_ < site && site < n_) ? -1 : +1;
      }
      sums.take(coeff, weight, 2);
    }
    slots_.clear();
  }

 private:
  static int axis_bit(Axis a) {
    if (a == Axis::X) return 0;
    if (a == Axis::Y) return 1;
    throw std::logic_error("hop endpoint carries a diagonal factor");
  }

  static std::uint64_t mark_toggle(std::uint64_t current, std::uint32_t site) {
    if (current != 0)
      throw std::logic_error("hop monomial toggled more than one site");
    return site + 1ull;
  }

  std::uint32_t index_of(const MonomialExpansion& ex, std::uint32_t site) const {
    const auto it =
        std::lower_bound(ex.support.begin(), ex.support.end(), site);
    if (it == ex.support.end() || *it != site)
      throw std::logic_error("hop endpoint missing from monomial support");
    return static_cast<std::uint32_t>(it - ex.support.begin());
  }

  std::uint32_t m_, n_;
  std::unordered_map<std::uint64_t, std::complex<double>> slots_;
};

/// Accumulates one double-excitation unit: strings with X/Y exactly on four
/// distinct endpoints, Z chains filling the first and third gaps. All sixteen
/// axis patterns share that fixed chain, so the unit reduces to a dense
/// 16-slot array. Contributions come from a closed form instead of string
/// multiplication: each ladder factor is (X -+ iY)/2 at its endpoint, with a
/// Z twist per crossing chain from factors at higher sites.
class QuadSlots {
 public:
  explicit QuadSlots(const std::array<std::uint32_t, 4>& sorted_sites)
      : s_(sorted_sites) {}

  void add_monomial(double coeff, const Ladder* ops) {
    static constexpr std::complex<double> kI{0.0, 1.0};
    std::array<std::array<std::complex<double>, 2>, 4> v;
    for (int i = 0; i < 4; ++i) {
      std::complex<double> cx{0.5, 0.0};
      std::complex<double> cy{0.0, ops[i].dagger ? -0.5 : 0.5};
      int left = 0, right = 0;
      for (int j = 0; j < 4; ++j) {
        if (ops[j].site > ops[i].site) ++(j < i ? left : right);
      }
      if (left & 1) {
        const auto tx = cx;
        cx = -kI * cy;
        cy = kI * tx;
      }
      if (right & 1) {
        const auto tx = cx;
        cx = kI * cy;
        cy = -kI * tx;
      }
      v[slot_of(ops[i].site)] = {cx, cy};
    }
    for (int b0 = 0; b0 < 2; ++b0) {
      const auto p0 = coeff * v[0][b0];
      for (int b1 = 0; b1 < 2; ++b1) {
        const auto p1 = p0 * v[1][b1];
        for (int b2 = 0; b2 < 2; ++b2) {
          const auto p2 = p1 * v[2][b2];
          for (int b3 = 0; b3 < 2; ++b3)
            slots_[b0 | (b1 << 1) | (b2 << 2) | (b3 << 3)] += p2 * v[3][b3];
        }
      }
    }
  }

  void flush(TallySums& sums) {
    const std::uint64_t weight =
        4 + (s_[1] - s_[0] - 1) + (s_[3] - s_[2] - 1);
    for (const auto& coeff : slots_) sums.take(coeff, weight, 4);
    slots_.fill({});
  }

 private:
  int slot_of(std::uint32_t site) const {
    for (int k = 0; k < 4; ++k)
      if (s_[k] == site) return k;
    throw std::logic_error("monomial site outside its double-excitation unit");
  }

  std::array<std::uint32_t, 4> s_;
  std::array<std::complex<double>, 16> slots_{};
};

}  // namespace detail

/// Streams the spin-orbital monomials of the mapped Hamiltonian unit by unit
/// and tallies surviving strings. Units never share an output string (the
/// X/Y endpoint set of a string is the odd-multiplicity site set of its source
/// monomial), so each unit's accumulator is exact and can be flushed
/// immediately; peak memory stays small at any orbital count.
inline HamiltonianTally tally_hamiltonian(const FcidumpData& data,
                                          double drop_threshold = 1e-10) {
  const auto norb = static_cast<std::uint32_t>(data.norb);
  detail::TallySums sums;
  sums.threshold = drop_threshold;

  const bool kC = true, kA = false;  // creation / annihilation

  // Diagonal strings: number operators and their pair products.
  {
    detail::DiagonalSlots diag;
    for (std::uint32_t p = 0; p < norb; ++p) {
      if (const double h = data.one_body_at(p, p); h != 0.0) {
        for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
          const std::uint32_t u = 2 * p + sigma;
          const detail::Ladder ops[2] = {{u, kC}, {u, kA}};
          diag.add(detail::expand_monomial(h, ops, 2));
        }
      }
      if (const double g = data.two_body_at(p, p, p, p); g != 0.0) {
        for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
          const std::uint32_t u = 2 * p + sigma, v = 2 * p + (1 - sigma);
          const detail::Ladder ops[4] = {{u, kC}, {v, kC}, {v, kA}, {u, kA}};
          diag.add(detail::expand_monomial(0.5 * g, ops, 4));
        }
      }
    }
    for (std::uint32_t p = 0; p < norb; ++p) {
      for (std::uint32_t q = p + 1; q < norb; ++q) {
        if (const double g = data.two_body_at(p, p, q, q); g != 0.0) {
          const std::array<std::array<std::uint32_t, 2>, 2> outer = {
              {{p, q}, {q, p}}};
          for (const auto& [a, b] : outer) {
            for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
              for (std::uint32_t tau = 0; tau < 2; ++tau) {
                const std::uint32_t u = 2 * a + sigma, v = 2 * b + tau;
                const detail::Ladder ops[4] = {
                    {u, kC}, {v, kC}, {v, kA}, {u, kA}};
                diag.add(detail::expand_monomial(0.5 * g, ops, 4));
              }
            }
          }
        }
        if (const double g = data.two_body_at(p, q, p, q); g != 0.0) {
          for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
            const std::uint32_t u = 2 * p + sigma, v = 2 * q + sigma;
            const detail::Ladder first[4] = {{u, kC}, {v, kC}, {u, kA}, {v, kA}};
            const detail::Ladder second[4] = {{v, kC}, {u, kC}, {v, kA}, {u, kA}};
            diag.add(detail::expand_monomial(0.5 * g, first, 4));
            diag.add(detail::expand_monomial(0.5 * g, second, 4));
          }
        }
      }
    }
    diag.flush(sums);
  }

  // Single-excitation units: hop (m, n) of one spin, optionally dressed by a
  // number operator. The dressing site comes from density-density integrals
  // (any spin) or same-spin exchange integrals; dressings colliding with an
  // endpoint vanish and are skipped to mirror the monomial-level rule.
  for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
    for (std::uint32_t mo = 0; mo < norb; ++mo) {
      for (std::uint32_t no = mo + 1; no < norb; ++no) {
        const std::uint32_t m = 2 * mo + sigma, n = 2 * no + sigma;
        detail::HopSlots unit(m, n);
        const std::array<std::array<std::uint32_t, 2>, 2> hops = {
            {{m, n}, {n, m}}};

        if (const double h = data.one_body_at(mo, no); h != 0.0) {
          for (const auto& [x, y] : hops) {
            const detail::Ladder ops[2] = {{x, kC}, {y, kA}};
            unit.add(detail::expand_monomial(h, ops, 2));
          }
        }
        for (std::uint32_t to = 0; to < norb; ++to) {
          if (const double g = data.two_body_at(mo, no, to, to); g != 0.0) {
            for (std::uint32_t tau = 0; tau < 2; ++tau) {
              if ((to == mo || to == no) && tau == sigma) continue;
              const std::uint32_t t = 2 * to + tau;
              for (const auto& [x, y] : hops) {
                const detail::Ladder outer[4] = {
                    {x, kC}, {t, kC}, {t, kA}, {y, kA}};
                const detail::Ladder inner[4] = {
                    {t, kC}, {x, kC}, {y, kA}, {t, kA}};
                unit.add(detail::expand_monomial(0.5 * g, outer, 4));
                unit.add(detail::expand_monomial(0.5 * g, inner, 4));
              }
            }
          }
          if (to == mo || to == no) continue;
          if (const double g = data.two_body_at(to, mo, to, no); g != 0.0) {
            const std::uint32_t t = 2 * to + sigma;
            for (const auto& [x, y] : hops) {
              const detail::Ladder cross[4] = {
                  {t, kC}, {x, kC}, {t, kA}, {y, kA}};
              const detail::Ladder mirror[4] = {
                  {x, kC}, {t, kC}, {y, kA}, {t, kA}};
              unit.add(detail::expand_monomial(0.5 * g, cross, 4));
              unit.add(detail::expand_monomial(0.5 * g, mirror, 4));
            }
          }
        }
        unit.flush(sums);
      }
    }
  }

  // Double-excitation units, same spin: four distinct orbitals, three ways to
  // pair them into an integral, eight operator orderings per pairing.
  for (std::uint32_t i = 0; i < norb; ++i) {
    for (std::uint32_t j = i + 1; j < norb; ++j) {
      for (std::uint32_t k = j + 1; k < norb; ++k) {
        for (std::uint32_t l = k + 1; l < norb; ++l) {
          const std::array<double, 3> g = {data.two_body_at(i, j, k, l),
                                           data.two_body_at(i, k, j, l),
                                           data.two_body_at(i, l, j, k)};
          if (g[0] == 0.0 && g[1] == 0.0 && g[2] == 0.0) continue;
          const std::array<std::array<std::array<std::uint32_t, 2>, 2>, 3>
              pairings = {{{{{i, j}, {k, l}}},
                           {{{i, k}, {j, l}}},
                           {{{i, l}, {j, k}}}}};
          for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
            detail::QuadSlots quad({2 * i + sigma, 2 * j + sigma,
                                    2 * k + sigma, 2 * l + sigma});
            for (int c = 0; c < 3; ++c) {
              if (g[c] == 0.0) continue;
              for (int swap = 0; swap < 2; ++swap) {
                const auto& po = pairings[c][swap];
                const auto& pi = pairings[c][1 - swap];
                for (const auto& [x, y] :
                     {std::array<std::uint32_t, 2>{po[0], po[1]},
                      std::array<std::uint32_t, 2>{po[1], po[0]}}) {
                  for (const auto& [u, v] :
                       {std::array<std::uint32_t, 2>{pi[0], pi[1]},
                        std::array<std::uint32_t, 2>{pi[1], pi[0]}}) {
                    const detail::Ladder ops[4] = {{2 * x + sigma, kC},
                                                   {2 * u + sigma, kC},
                                                   {2 * v + sigma, kA},
                                                   {2 * y + sigma, kA}};
                    quad.add_monomial(0.5 * g[c], ops);
                  }
                }
              }
            }
            quad.flush(sums);
          }
        }
      }
    }
  }

  // Double-excitation units, mixed spin: an up hop times a down hop; the four
  // ordered integral lookups collapse to one canonical value.
  for (std::uint32_t a = 0; a < norb; ++a) {
    for (std::uint32_t b = a + 1; b < norb; ++b) {
      for (std::uint32_t c = 0; c < norb; ++c) {
        for (std::uint32_t d = c + 1; d < norb; ++d) {
          const double g = data.two_body_at(a, b, c, d);
          if (g == 0.0) continue;
          std::array<std::uint32_t, 4> sites = {2 * a, 2 * b, 2 * c + 1,
                                                2 * d + 1};
          std::sort(sites.begin(), sites.end());
          detail::QuadSlots quad(sites);
          const std::array<std::array<std::uint32_t, 2>, 2> up = {
              {{2 * a, 2 * b}, {2 * b, 2 * a}}};
          const std::array<std::array<std::uint32_t, 2>, 2> down = {
              {{2 * c + 1, 2 * d + 1}, {2 * d + 1, 2 * c + 1}}};
          for (const auto& [x, y] : up) {
            for (const auto& [u, v] : down) {
              const detail::Ladder ops[4] = {
                  {x, kC}, {u, kC}, {v, kA}, {y, kA}};
              quad.add_monomial(0.5 * g, ops);
            }
          }
          for (const auto& [x, y] : down) {
            for (const auto& [u, v] : up) {
              const detail::Ladder ops[4] = {
                  {x, kC}, {u, kC}, {v, kA}, {y, kA}};
              quad.add_monomial(0.5 * g, ops);
            }
          }
          quad.flush(sums);
        }
      }
    }
  }

  if (sums.n_r == 0)
    throw Error(errc::empty_hamiltonian, "no non-identity terms survive mapping");

  HamiltonianTally out;
  out.n_qubits = 2 * norb;
  out.identity_offset = data.core_energy + sums.offset;
  out.step = {sums.n_r, sums.n_c, sums.n_cliff};
  return out;
}

}  // namespace qre
