#include "test_support.hpp"

#include <random>
#include <thread>

#include "fractel/digit_eval.hpp"
#include "fractel/poly_fractel.hpp"

using namespace fractel;

namespace {
const RationalVector kCubic{1, 3, 2, 1};
}

TEST_CASE("digit strings") {
  const auto x = DigitNumber::parse("1.23");
  CHECK(x.base() == 10);
  CHECK(x.digits() == std::vector<unsigned>{1, 2, 3});
  CHECK(x.value() == Rational(123, 100));
  CHECK(x.str() == "1.23");
  CHECK(DigitNumber::parse("7").value() == Rational(7));
  CHECK(DigitNumber::parse("f.8", 16).value() == Rational(31, 2));
  CHECK(DigitNumber::parse("1.01", 2).value() == Rational(5, 4));
  for (const char* bad : {"", "12.3", "1.2x", ".5", "a.1", "-1.2"}) {
    INFO(bad);
    CHECK_THROWS_KIND(DigitNumber::parse(bad), ErrorKind::BadDigit);
  }
  CHECK_THROWS_KIND(DigitNumber::parse("2.1", 2), ErrorKind::BadDigit);
  CHECK_THROWS_KIND(DigitNumber(10, 10, {}), ErrorKind::BadDigit);
  CHECK_THROWS_KIND(DigitNumber::parse("1", 1), ErrorKind::BadDigit);
}

TEST_CASE("J matrices") {
  const auto j0 = make_j_matrix(10, 3, 0);
  // digit 0: x -> x/10, J = diag(1, 1/10, 1/100, 1/1000)
  CHECK(j0.entries == RationalMatrix::diagonal({1, Rational(1, 10), Rational(1, 100), Rational(1, 1000)}));
  const auto j = make_j_matrix(10, 3, 7);
  // the first row of J(n) evaluates at n: p(n + x/10) has constant term p(n)
  const RationalVector a{1, 3, 2, 1};
  CHECK((j.entries * a)[0] == evaluate(a, Rational(7)));
  CHECK_THROWS_KIND(make_j_matrix(10, 3, 10), ErrorKind::BadDigit);

  const auto t1 = j_table(10, 3);
  const auto t2 = j_table(10, 3);
  CHECK(t1.get() == t2.get());
  CHECK(t1->f64(7).size() == 16);
}

TEST_CASE("worked cubic: 1 + 3x + 2x^2 + x^3") {
  const auto s = eval_digits_exact(kCubic, DigitNumber::parse("1.2"));
  CHECK(s.value() == Rational(1151, 125));
  CHECK(s.vector == RationalVector{Rational(1151, 125), Rational(303, 2500), Rational(7, 12500),
                                   Rational(1, 1000000)});
  CHECK(s.digits_consumed == 2);
  const auto s3 = extend_precision(s, 3);
  CHECK(s3.value() == Rational(9576667, 1000000));
  CHECK(s3.vector == eval_digits_exact(kCubic, DigitNumber::parse("1.23")).vector);
  CHECK_THROWS_KIND(extend_precision(s, 10), ErrorKind::BadDigit);
}

TEST_CASE("constant and linear polynomials") {
  CHECK(eval_digits_exact({5}, DigitNumber::parse("9.99")).value() == Rational(5));
  CHECK(eval_digits_exact({Rational(1, 3), 2}, DigitNumber::parse("4.5")).value() == Rational(28, 3));
  CHECK_THROWS_KIND(eval_digits_exact({}, DigitNumber::parse("1")), ErrorKind::InvalidArgument);
}

TEST_CASE("exact digit evaluation equals direct evaluation") {
  std::mt19937_64 rng(11);
  for (unsigned base : {2u, 3u, 10u, 16u}) {
    std::uniform_int_distribution<unsigned> digit(0, base - 1), len(0, 8), deg(0, 5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int i = 0; i < 25; ++i) {
      RationalVector c(deg(rng) + 1);
      for (auto& a : c) a = Rational(num(rng), den(rng));
      std::vector<unsigned> frac(len(rng));
      for (auto& d : frac) d = digit(rng);
      const DigitNumber x(base, digit(rng), frac);
      CHECK(eval_digits_exact(c, x).value() == evaluate(c, x.value()));
    }
  }
}

TEST_CASE("float evaluation tracks the exact value") {
  const std::vector<double> c{1, 3, 2, 1};
  const auto x = DigitNumber::parse("1.23");
  CHECK(eval_digits_f64(c, x).value() == doctest::Approx(9.576667).epsilon(1e-15));
  const std::vector<float> cf{1, 3, 2, 1};
  CHECK(eval_digits_f32(cf, x).value() == doctest::Approx(9.576667).epsilon(1e-6));
  auto st = start_float(c, 10);
  for (unsigned d : x.digits()) st = extend_precision(st, d);
  CHECK(st.value() == eval_digits_f64(c, x).value());
  CHECK(horner(c, 1.23) == doctest::Approx(9.576667));
}

TEST_CASE("Horner comparison") {
  const auto x = DigitNumber::parse("1.23");
  const auto r = horner_compare(std::vector<double>{1, 3, 2, 1}, x, FloatPrecision::F64);
  CHECK(r.exact_value == Rational(9576667, 1000000));
  CHECK(r.horner_err < 1e-14);
  CHECK(r.ifs_err < 1e-14);
  const auto r32 = horner_compare(kCubic, x, FloatPrecision::F32);
  CHECK(r32.horner_err < 1e-6);
  CHECK(r32.horner_err > 1e-12);
  CHECK(relative_error(0.0, Rational(0)) == 0.0);
  CHECK(relative_error(1.5, Rational(1)) == 0.5);
}

TEST_CASE("concurrent table lookups") {
  std::vector<std::thread> pool;
  std::vector<Rational> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    pool.emplace_back([&, t] {
      const unsigned degree = 4 + static_cast<unsigned>(t % 3);
      RationalVector c(degree + 1, Rational(1));
      for (int k = 0; k < 50; ++k) results[t] = eval_digits_exact(c, DigitNumber::parse("3.14159")).value();
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    const unsigned degree = 4 + static_cast<unsigned>(t % 3);
    CHECK(results[t] == evaluate(RationalVector(degree + 1, Rational(1)), Rational(314159, 100000)));
  }
}
