#include "doctest.h"

#include "idem/error.hpp"
#include "idem/matrix.hpp"
#include "support.hpp"

#include <cmath>

using namespace idem;
using idem::test::Rng;

namespace {

DenseMatrix mat(const Semiring& s, std::size_t r, std::size_t c, std::vector<Element> v) {
  return DenseMatrix(s, r, c, std::move(v));
}

std::vector<Semiring> exact_idempotent_and_fields() {
  return {Semiring::max_plus(), Semiring::min_plus(), Semiring::max_min(), Semiring::boolean(),
          Semiring::max_times(), Semiring::real(),   Semiring::rational(),
          Semiring::interval_over(Semiring::max_plus())};
}

}  // namespace

TEST_CASE("mat_add") {
  const auto mp = Semiring::max_plus();
  CHECK(mat_add(mat(mp, 2, 2, {1.0, 2.0, 3.0, 4.0}), mat(mp, 2, 2, {4.0, 3.0, 2.0, 1.0})) ==
        mat(mp, 2, 2, {4.0, 3.0, 3.0, 4.0}));

  Rng rng(1);
  for (const auto& s : exact_idempotent_and_fields()) {
    const auto a = test::random_matrix(s, 3, 2, rng);
    if (s.idempotent()) CHECK(mat_add(a, a) == a);
    CHECK(mat_add(a, DenseMatrix::zero(s, 3, 2)) == a);
  }

  CHECK_THROWS_AS(mat_add(DenseMatrix::zero(mp, 2, 2), DenseMatrix::zero(mp, 2, 3)), Error);
  try {
    mat_add(DenseMatrix::zero(mp, 2, 2), DenseMatrix::zero(Semiring::min_plus(), 2, 2));
    FAIL("expected SemiringMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SemiringMismatch);
  }
}

TEST_CASE("mat_mul") {
  const auto mn = Semiring::min_plus();
  // entrywise brute force: (0,0) = min(0+0, 1+2), (0,1) = min(0+inf, 1+0),
  // (1,0) = min(inf+0, 0+2), (1,1) = min(inf+inf, 0+0)
  const auto a = mat(mn, 2, 2, {0.0, 1.0, pos_inf, 0.0});
  const auto b = mat(mn, 2, 2, {0.0, pos_inf, 2.0, 0.0});
  CHECK(mat_mul(a, b) == mat(mn, 2, 2, {0.0, 1.0, 2.0, 0.0}));

  // 3-node path 0 -> 1 -> 2: the only length-2 walk is 0 -> 2
  const auto bo = Semiring::boolean();
  const auto adj = mat(bo, 3, 3, {false, true, false, false, false, true, false, false, false});
  CHECK(mat_mul(adj, adj) == mat(bo, 3, 3, {false, false, true, false, false, false, false, false, false}));

  Rng rng(2);
  for (const auto& s : exact_idempotent_and_fields()) {
    const auto m = test::random_matrix(s, 3, 3, rng);
    CHECK(mat_mul(m, DenseMatrix::identity(s, 3)) == m);
    CHECK(mat_mul(DenseMatrix::identity(s, 3), m) == m);
  }

  CHECK_THROWS_AS(mat_mul(DenseMatrix::zero(mn, 2, 3), DenseMatrix::zero(mn, 2, 3)), Error);
}

TEST_CASE("rectangular products") {
  const auto mp = Semiring::max_plus();
  const auto a = mat(mp, 1, 3, {1.0, 2.0, 3.0});
  const auto b = mat(mp, 3, 2, {0.0, neg_inf, 1.0, 0.0, neg_inf, -5.0});
  CHECK(mat_mul(a, b) == mat(mp, 1, 2, {3.0, 2.0}));
}

TEST_CASE("identity and zero") {
  CHECK(DenseMatrix::identity(Semiring::max_plus(), 2) == mat(Semiring::max_plus(), 2, 2, {0.0, neg_inf, neg_inf, 0.0}));
  CHECK(DenseMatrix::identity(Semiring::min_plus(), 2) == mat(Semiring::min_plus(), 2, 2, {0.0, pos_inf, pos_inf, 0.0}));
  const auto z = DenseMatrix::zero(Semiring::boolean(), 2, 3);
  for (const auto& e : z.data()) CHECK(e == Element(false));
  CHECK_THROWS_AS(DenseMatrix(Semiring::max_plus(), 0, 2, {}), Error);
  CHECK_THROWS_AS(DenseMatrix(Semiring::max_plus(), 1, 1, {Element(pos_inf)}), Error);
}

TEST_CASE("dot") {
  const auto mp = Semiring::max_plus();
  // max(1+3, 2+4)
  CHECK(dot(DenseVector(mp, {1.0, 2.0}), DenseVector(mp, {3.0, 4.0})) == Element(6.0));
  CHECK(dot(DenseVector(Semiring::real(), {1.0, 2.0}), DenseVector(Semiring::real(), {3.0, 4.0})) == Element(11.0));
  Rng rng(3);
  for (const auto& s : exact_idempotent_and_fields()) {
    const auto x = test::random_vector(s, 4, rng);
    CHECK(dot(x, DenseVector::zero(s, 4)) == s.zero());
  }
  CHECK_THROWS_AS(dot(DenseVector(mp, {1.0}), DenseVector(mp, {1.0, 2.0})), Error);
}

TEST_CASE("scale") {
  const auto mp = Semiring::max_plus();
  CHECK(scale(2.0, DenseVector(mp, {0.0, -1.0, 5.0})) == DenseVector(mp, {2.0, 1.0, 7.0}));
  Rng rng(4);
  for (const auto& s : exact_idempotent_and_fields()) {
    const auto v = test::random_vector(s, 5, rng);
    CHECK(scale(s.one(), v) == v);
    CHECK(scale(s.zero(), v) == DenseVector::zero(s, 5));
    const Element l = test::random_element(s, rng);
    const Element m = test::random_element(s, rng);
    CHECK(scale(s.add(l, m), v) == vec_add(scale(l, v), scale(m, v)));
    CHECK(scale(s.mul(l, m), v) == scale(l, scale(m, v)));
  }
  CHECK_THROWS_AS(scale(Element(pos_inf), DenseVector(mp, {0.0})), Error);
}

TEST_CASE("mat_pow") {
  Rng rng(5);
  const auto mn = Semiring::min_plus();
  const auto a = test::random_matrix(mn, 3, 3, rng);
  CHECK(mat_pow(a, 0) == DenseMatrix::identity(mn, 3));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 5) == mat_mul(mat_mul(mat_mul(mat_mul(a, a), a), a), a));
  // 2-cycle 0 -> 1 (1), 1 -> 0 (2): each closed walk of length 2 costs 3
  const auto cyc = mat(mn, 2, 2, {pos_inf, 1.0, 2.0, pos_inf});
  const auto sq = mat_pow(cyc, 2);
  CHECK(sq(0, 0) == Element(3.0));
  CHECK(sq(1, 1) == Element(3.0));
  CHECK_THROWS_AS(mat_pow(DenseMatrix::zero(mn, 2, 3), 2), Error);
}

TEST_CASE("square matrices form a semiring") {
  Rng rng(6);
  for (const auto& s : exact_idempotent_and_fields()) {
    CAPTURE(s.name());
    for (std::size_t n = 1; n <= 4; ++n) {
      test::Algebra<DenseMatrix> alg{
          [](const DenseMatrix& a, const DenseMatrix& b) { return mat_add(a, b); },
          [](const DenseMatrix& a, const DenseMatrix& b) { return mat_mul(a, b); },
          DenseMatrix::zero(s, n, n),
          DenseMatrix::identity(s, n),
          [](const DenseMatrix& a, const DenseMatrix& b) { return a == b; },
          s.idempotent()};
      test::AxiomTally t;
      for (int i = 0; i < 40; ++i)
        test::check_triple(alg, test::random_matrix(s, n, n, rng), test::random_matrix(s, n, n, rng),
                           test::random_matrix(s, n, n, rng), t);
      CAPTURE(t.summary());
      CHECK(t.failures() == 0);
    }
  }
}

TEST_CASE("dot is bilinear") {
  Rng rng(7);
  for (const auto& s : exact_idempotent_and_fields()) {
    for (int i = 0; i < 50; ++i) {
      const auto x = test::random_vector(s, 4, rng);
      const auto y = test::random_vector(s, 4, rng);
      const auto z = test::random_vector(s, 4, rng);
      const Element l = test::random_element(s, rng);
      const Element m = test::random_element(s, rng);
      CHECK(dot(vec_add(scale(l, x), scale(m, y)), z) == s.add(s.mul(l, dot(x, z)), s.mul(m, dot(y, z))));
    }
  }
}

TEST_CASE("max-plus dot is the log image of max-times dot") {
  Rng rng(8);
  const auto mp = Semiring::max_plus();
  const auto mt = Semiring::max_times();
  for (int t = 0; t < 200; ++t) {
    std::vector<Element> x, y, ex, ey;
    for (int i = 0; i < 5; ++i) {
      const double a = test::uniform_real(rng, -5, 5);
      const double b = test::uniform_real(rng, -5, 5);
      x.emplace_back(a);
      y.emplace_back(b);
      ex.emplace_back(std::exp(a));
      ey.emplace_back(std::exp(b));
    }
    const double viaexp = real_of(dequantize(DeformationParams(1.0), real_of(dot(DenseVector(mt, ex), DenseVector(mt, ey)))));
    CHECK(std::abs(viaexp - real_of(dot(DenseVector(mp, x), DenseVector(mp, y)))) <= 1e-9);
  }
}

TEST_CASE("mat_mul accumulates in ascending k") {
  Rng rng(9);
  const auto r = Semiring::real();
  for (int t = 0; t < 20; ++t) {
    std::vector<Element> av, bv;
    for (int i = 0; i < 16; ++i) {
      av.emplace_back(test::uniform_real(rng, -1, 1));
      bv.emplace_back(test::uniform_real(rng, -1, 1));
    }
    const DenseMatrix a(r, 4, 4, av);
    const DenseMatrix b(r, 4, 4, bv);
    const auto p = mat_mul(a, b);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) acc = acc + real_of(a(i, k)) * real_of(b(k, j));
        CHECK(p(i, j) == Element(acc));
      }
  }
}
