#include "qre/pauli.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"

namespace {

using qre::Axis;
using qre::PauliString;

TEST(PauliString, WeightAndIdentity) {
  PauliString id(4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.weight(), 0u);
  EXPECT_EQ(id.to_word(), "I");

  PauliString s(4, {{2, Axis::X}, {0, Axis::Z}, {3, Axis::Y}});
  EXPECT_EQ(s.weight(), 3u);
  EXPECT_EQ(s.to_word(), "Z0 X2 Y3");
  EXPECT_EQ(s.count(Axis::X), 1u);
  EXPECT_EQ(s.count(Axis::Y), 1u);
  EXPECT_EQ(s.count(Axis::Z), 1u);
}

TEST(PauliString, RejectsOutOfRangeAndDuplicateQubits) {
  EXPECT_THROW(PauliString(2, {{2, Axis::X}}), qre::Error);
  EXPECT_THROW(PauliString(3, {{1, Axis::X}, {1, Axis::Z}}), qre::Error);
}

TEST(PauliMultiply, Involution) {
  PauliString x0(1, {{0, Axis::X}});
  auto [phase, product] = qre::multiply(x0, x0);
  EXPECT_EQ(phase, std::complex<double>(1.0, 0.0));
  EXPECT_TRUE(product.is_identity());
}

TEST(PauliMultiply, SingleQubitCyclicIdentity) {
  PauliString x0(1, {{0, Axis::X}});
  PauliString y0(1, {{0, Axis::Y}});
  auto [phase, product] = qre::multiply(x0, y0);
  EXPECT_EQ(phase, std::complex<double>(0.0, 1.0));
  EXPECT_EQ(product.to_word(), "Z0");
}

TEST(PauliMultiply, TwoQubitExample) {
  PauliString a(2, {{0, Axis::X}, {1, Axis::Z}});
  PauliString b(2, {{0, Axis::Z}, {1, Axis::Z}});
  auto [phase, product] = qre::multiply(a, b);
  EXPECT_EQ(phase, std::complex<double>(0.0, -1.0));
  EXPECT_EQ(product.to_word(), "Y0");
}

TEST(PauliMultiply, MismatchedWidthsFail) {
  PauliString a(2, {{0, Axis::X}});
  PauliString b(3, {{0, Axis::X}});
  try {
    qre::multiply(a, b);
    FAIL() << "expected mismatched_width";
  } catch (const qre::Error& e) {
    EXPECT_EQ(e.code(), qre::errc::mismatched_width);
  }
}

PauliString random_string(std::mt19937& rng, std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, Axis>> ops;
  std::uniform_int_distribution<int> axis_dist(0, 3);
  for (std::uint32_t q = 0; q < n; ++q) {
    int a = axis_dist(rng);
    if (a > 0) ops.emplace_back(q, static_cast<Axis>(a));
  }
  return PauliString(n, std::move(ops));
}

TEST(PauliMultiply, AgreesWithDenseMatrixOracle) {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t n = 1 + rng() % 4;
    auto a = random_string(rng, n);
    auto b = random_string(rng, n);
    auto [phase, product] = qre::multiply(a, b);
    EXPECT_TRUE(phase == std::complex<double>(1, 0) ||
                phase == std::complex<double>(-1, 0) ||
                phase == std::complex<double>(0, 1) ||
                phase == std::complex<double>(0, -1));
    oracle::Mat expected = oracle::dense_pauli(a) * oracle::dense_pauli(b);
    oracle::Mat got = phase * oracle::dense_pauli(product);
    ASSERT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(PauliMultiply, ReversedProductDiffersOnlyByPhaseSign) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t n = 1 + rng() % 4;
    auto a = random_string(rng, n);
    auto b = random_string(rng, n);
    auto [pab, sab] = qre::multiply(a, b);
    auto [pba, sba] = qre::multiply(b, a);
    EXPECT_EQ(sab, sba);
    EXPECT_TRUE(pab == pba || pab == -pba);
  }
}

TEST(PauliOrdering, WordComparisonIsLexicographic) {
  PauliString id(3);
  PauliString x0(3, {{0, Axis::X}});
  PauliString y0(3, {{0, Axis::Y}});
  PauliString z2(3, {{2, Axis::Z}});
  PauliString x0z2(3, {{0, Axis::X}, {2, Axis::Z}});
  EXPECT_LT(qre::compare_words(id, x0), 0);
  EXPECT_LT(qre::compare_words(x0, y0), 0);
  EXPECT_GT(qre::compare_words(z2, x0), 0);
  EXPECT_LT(qre::compare_words(x0, x0z2), 0);
  EXPECT_EQ(qre::compare_words(x0, x0), 0);
  EXPECT_GT(qre::compare_words(y0, x0), 0);
}

TEST(PauliOrdering, HashAndEqualityAgree) {
  std::mt19937 rng(3);
  qre::PauliStringHash hash;
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t n = 1 + rng() % 5;
    auto a = random_string(rng, n);
    auto b = a;
    EXPECT_EQ(hash(a), hash(b));
    EXPECT_EQ(a, b);
  }
}

}  // namespace
