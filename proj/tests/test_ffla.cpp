#include "doctest.h"

#include <set>

#include "mrgrc/matrix.hpp"
#include "testutil.hpp"

using mrgrc::Field;
using mrgrc::Rng;
using mrgrc::SymbolMatrix;
using testutil::code_of;

namespace {

// Independent shift-and-xor reference for table-driven multiplication.
uint32_t ref_mul(uint32_t a, uint32_t b, const Field& f) {
  uint32_t hi = 1u << f.width();
  uint32_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & hi) a ^= f.poly();
  }
  return acc;
}

}  // namespace

TEST_CASE("field construction pins the polynomials") {
  CHECK(Field::gf256().order() == 256);
  CHECK(Field::gf256().poly() == 0x11B);
  CHECK(Field::gf65536().order() == 65536);
  CHECK(Field::gf65536().poly() == 0x1100B);
  CHECK(Field::by_name("gf256").width() == 8);
  CHECK(Field::by_name("gf65536").width() == 16);
  CHECK(code_of([] { Field::by_name("gf1024"); }) == mrgrc::Errc::BadInput);
}

TEST_CASE("table multiplication matches the reference implementation") {
  for (const Field* f : {&Field::gf256(), &Field::gf65536()}) {
    auto rng = Rng::stream(11, f->width());
    for (int i = 0; i < 10000; ++i) {
      uint32_t a = (uint32_t)rng.below(f->order());
      uint32_t b = (uint32_t)rng.below(f->order());
      CHECK(f->mul(a, b) == ref_mul(a, b, *f));
    }
  }
}

TEST_CASE("sampled field axioms") {
  for (const Field* f : {&Field::gf256(), &Field::gf65536()}) {
    auto rng = Rng::stream(12, f->width());
    for (int i = 0; i < 2000; ++i) {
      uint32_t a = (uint32_t)rng.below(f->order());
      uint32_t b = (uint32_t)rng.below(f->order());
      uint32_t c = (uint32_t)rng.below(f->order());
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, a) == 0);  // characteristic 2
      CHECK(f->mul(a, 1) == a);
    }
  }
}

TEST_CASE("every nonzero element inverts") {
  const Field& f8 = Field::gf256();
  for (uint32_t a = 1; a < 256; ++a) CHECK(f8.mul(a, f8.inv(a)) == 1);
  const Field& f16 = Field::gf65536();
  for (uint32_t a = 1; a < 65536; ++a) {
    if (f16.mul(a, f16.inv(a)) != 1) FAIL("inverse failed at ", a);
  }
  CHECK(code_of([&] { f8.inv(0); }) == mrgrc::Errc::BadInput);
  CHECK(code_of([&] { f8.div(1, 0); }) == mrgrc::Errc::BadInput);
}

TEST_CASE("generator has full multiplicative order in gf256") {
  const Field& f = Field::gf256();
  uint32_t g = f.generator();
  uint32_t x = g;
  for (int i = 1; i < 255; ++i) {
    CHECK(x != 1);
    x = f.mul(x, g);
  }
  CHECK(x == 1);
  CHECK(f.pow(g, 255) == 1);
  CHECK(f.pow(g, 0) == 1);
  CHECK(f.pow(5, 3) == f.mul(5, f.mul(5, 5)));
}

TEST_CASE("rank basics") {
  const Field& f = Field::gf65536();
  CHECK(mrgrc::rank(mrgrc::identity_matrix(4), f) == 4);
  CHECK(mrgrc::rank(SymbolMatrix(3, 5), f) == 0);

  auto rng = Rng::stream(13, 0);
  auto m = mrgrc::random_matrix(4, 7, f, rng);
  int r = mrgrc::rank(m, f);
  CHECK(mrgrc::rank(mrgrc::stack(m, m), f) == r);  // duplicates add nothing

  // subadditivity on random pairs
  for (int i = 0; i < 200; ++i) {
    auto a = mrgrc::random_matrix(1 + (int)rng.below(5), 6, f, rng);
    auto b = mrgrc::random_matrix(1 + (int)rng.below(5), 6, f, rng);
    CHECK(mrgrc::rank(mrgrc::stack(a, b), f) <= mrgrc::rank(a, f) + mrgrc::rank(b, f));
    CHECK(mrgrc::rank(mrgrc::stack(a, b), f) >= mrgrc::rank(a, f));
  }
}

TEST_CASE("rank is invariant under invertible row operations") {
  const Field& f = Field::gf256();
  auto rng = Rng::stream(14, 0);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = mrgrc::random_matrix(5, 8, f, rng);
    int r = mrgrc::rank(m, f);
    auto m2 = m;
    // scale a row by a nonzero constant
    int row = (int)rng.below(5);
    uint32_t c = 1 + (uint32_t)rng.below(255);
    for (int j = 0; j < 8; ++j) m2.set(row, j, f.mul(c, m2.at(row, j)));
    // add a multiple of another row
    int src = (int)rng.below(5);
    if (src != row)
      for (int j = 0; j < 8; ++j)
        m2.set(row, j, f.add(m2.at(row, j), f.mul(7, m2.at(src, j))));
    CHECK(mrgrc::rank(m2, f) == r);
  }
}

TEST_CASE("in_rowspace distinguishes members from outsiders") {
  const Field& f = Field::gf256();
  SymbolMatrix basis(2, 4);
  basis.set(0, 0, 1);
  basis.set(1, 1, 1);

  SymbolMatrix inside(1, 4);
  inside.set(0, 0, 5);
  inside.set(0, 1, 9);
  CHECK(mrgrc::in_rowspace(inside, basis, f));

  SymbolMatrix outside(1, 4);
  outside.set(0, 2, 1);
  CHECK_FALSE(mrgrc::in_rowspace(outside, basis, f));
}

TEST_CASE("random_matrix streams are deterministic and independent") {
  const Field& f = Field::gf65536();
  auto r1 = Rng::stream(99, 4);
  auto r2 = Rng::stream(99, 4);
  auto r3 = Rng::stream(99, 5);
  auto a = mrgrc::random_matrix(3, 3, f, r1);
  auto b = mrgrc::random_matrix(3, 3, f, r2);
  auto c = mrgrc::random_matrix(3, 3, f, r3);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("random 10x10 matrices over gf65536 are almost surely full rank") {
  const Field& f = Field::gf65536();
  int full = 0;
  const int kTrials = 10000;
  for (int s = 0; s < kTrials; ++s) {
    auto rng = Rng::stream(777, s);
    if (mrgrc::rank(mrgrc::random_matrix(10, 10, f, rng), f) == 10) ++full;
  }
  // theoretical full-rank probability prod_{i=1..10} (1 - 2^-16i) > 0.99998
  CHECK(full >= kTrials - 1);
}

TEST_CASE("uniform draws cover the field") {
  auto rng = Rng::stream(5, 0);
  std::set<uint64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    uint64_t v = rng.below(256);
    CHECK(v < 256);
    seen.insert(v);
  }
  CHECK(seen.size() >= 200);
}
