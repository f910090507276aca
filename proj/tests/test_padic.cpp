#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "pvanish/padic.hpp"

using namespace pvanish;

namespace {

Partition P(std::initializer_list<Part> parts) { return Partition(std::vector<Part>(parts)); }

// Sum of the parts of exact valuation i, for every i, against a_i p^i.
bool adic_by_definition(const Partition& a, Part n, Part p) {
  std::map<int, Part> sums;
  for (Part c : a) {
    int v = 0;
    Part x = c;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    sums[v] += c;
  }
  Part m = n, scale = 1;
  for (int i = 0; m > 0 || i == 0; ++i, m /= p, scale *= p) {
    if (sums[i] != (m % p) * scale) return false;
    sums.erase(i);
    if (m == 0) break;
  }
  for (const auto& [i, s] : sums)
    if (s != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PAdicContext(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(PAdicContext(-1, 2), std::invalid_argument);
}

TEST_CASE("digits and splits") {
  const PAdicContext seven(7, 2);
  CHECK(seven.digits() == std::vector<Part>{1, 1, 1});
  CHECK(seven.d(1) == 3);
  CHECK(seven.e(1) == 1);
  const PAdicContext eight(8, 3);
  CHECK(eight.digits() == std::vector<Part>{2, 2});
  CHECK(eight.d(1) == 2);
  CHECK(eight.e(1) == 2);
  const PAdicContext zero(0, 5);
  CHECK(zero.digits() == std::vector<Part>{0});
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(zero.d(t) == 0);
    CHECK(zero.e(t) == 0);
  }
  for (Part p : {2, 3, 5, 7})
    for (Part n = 0; n <= 200; ++n) {
      const PAdicContext ctx(n, p);
      Part back = 0;
      for (std::size_t i = ctx.k() + 1; i-- > 0;) back = back * p + ctx.digit(i);
      CHECK(back == n);
      for (std::size_t t = 0; t <= ctx.k() + 2; ++t) {
        if (t > ctx.k() && n > 0) {
          CHECK(ctx.d(t) == 0);
          CHECK(ctx.e(t) == n);
        } else {
          CHECK(ctx.d(t) * ctx.power(t) + ctx.e(t) == n);
          CHECK(ctx.e(t) < ctx.power(t));
        }
      }
    }
}

TEST_CASE("lambda_{n,p}") {
  CHECK(lambda_np(PAdicContext(7, 2)) == P({4, 2, 1}));
  CHECK(lambda_np(PAdicContext(8, 3)) == P({3, 3, 1, 1}));
  CHECK(lambda_np(PAdicContext(0, 2)).empty());
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 40; ++n) {
      const PAdicContext ctx(n, p);
      CHECK(lambda_np(ctx).size() == n);
      CHECK(is_p_adic_type(lambda_np(ctx), ctx));
    }
}

TEST_CASE("p-adic type") {
  CHECK_FALSE(is_p_adic_type(P({2, 1, 1}), PAdicContext(4, 2)));
  CHECK(is_p_adic_type(P({4, 2, 1}), PAdicContext(7, 2)));
  CHECK_THROWS_AS(is_p_adic_type(P({2}), PAdicContext(3, 2)), std::invalid_argument);
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 16; ++n) {
      const PAdicContext ctx(n, p);
      for_each_partition(n, [&](const Partition& a) {
        const auto r = p_adic_type(a, ctx);
        CHECK(r.is_p_adic_type == adic_by_definition(a, n, p));
        if (r.is_p_adic_type) {
          for (std::size_t i = 0; i < r.witness.groups.size(); ++i) {
            Part s = 0;
            for (Part x : r.witness.groups[i]) {
              CHECK(x % p != 0);
              s += x;
            }
            CHECK(s == ctx.digit(i));
          }
        }
      });
    }
}

TEST_CASE("b-invariants") {
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 25; ++n) {
      const PAdicContext ctx(n, p);
      // the trivial character is never singular
      const Partition row = Partition::rectangle(n, n ? 1 : 0);
      for (std::size_t i = 0; i <= ctx.k() + 1; ++i) CHECK(b_invariant(row, p, i) == ctx.digit(i));
      for_each_partition(n, [&](const Partition& a) {
        for (std::size_t j = 0; j <= 3; ++j) {
          Part sum = 0, scale = 1;
          for (std::size_t i = j; i <= j + 8; ++i, scale *= p) {
            const Part b = b_invariant(a, p, i);
            CHECK(b >= 0);
            sum += scale * b;
          }
          Part pj = 1;
          for (std::size_t s = 0; s < j; ++s) pj *= p;
          CHECK(sum == r_weight(a, pj));
        }
      });
    }
  for (Part p : {3, 5, 7})
    for (Part n = 0; n < p; ++n)
      for (const auto& a : enumerate_partitions(n)) {
        CHECK(b_invariant(a, p, 0) == n);
        CHECK(b_invariant(a, p, 1) == 0);
        CHECK(b_invariant(a, p, 2) == 0);
      }
}

TEST_CASE("lambda_{n,p} as a character label can be singular") {
  // chi^(2,1) has degree 2: lambda_{3,2} is of class 0 and b_0 = 3 != a_0 = 1
  const PAdicContext ctx(3, 2);
  const Partition lam = lambda_np(ctx);
  CHECK(lam == P({2, 1}));
  CHECK(is_class_m(lam, ctx, 0));
  CHECK(is_p_singular(lam, ctx));
  CHECK(b_invariant(lam, 2, 0) == 3);
  CHECK(b_invariant(lam, 2, 1) == 0);
}

TEST_CASE("class-m sequences") {
  const PAdicContext ctx(11, 2);  // 11 = 8 + 2 + 1
  CHECK(class_m_sequence(ctx, 0) == std::vector<Part>{8, 2, 1});
  CHECK(class_m_sequence(ctx, 1) == std::vector<Part>{8, 2});
  CHECK(class_m_sequence(ctx, 4).empty());
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 18; ++n) {
      const PAdicContext ctx2(n, p);
      const Partition row = Partition::rectangle(n, n ? 1 : 0);
      for (std::size_t m = 0; m <= ctx2.k() + 1; ++m) CHECK_FALSE(is_class_m(row, ctx2, m));
      for_each_partition(n, [&](const Partition& a) {
        bool any = false;
        for (std::size_t m = 0; m <= ctx2.k() + 2; ++m) {
          const bool cm = is_class_m(a, ctx2, m);
          if (m > ctx2.k()) CHECK_FALSE(cm);
          if (cm) CHECK(is_class_m(a, ctx2, 0));
          any = any || cm;
        }
        CHECK(any == is_p_singular(a, ctx2));
      });
    }
}

TEST_CASE("singularity") {
  CHECK(is_p_singular(P({3, 3, 2}), PAdicContext(8, 2)));
  for (auto method : {SingularityMethod::hooks, SingularityMethod::character, SingularityMethod::b_invariants,
                      SingularityMethod::degree})
    for (Part n = 1; n <= 12; ++n) CHECK_FALSE(is_p_singular(P({n}), PAdicContext(n, 2), method));

  // degree valuations against exact degrees from the hook formula
  for (Part p : {2, 3, 5, 7})
    for (Part n = 0; n <= 14; ++n) {
      const PAdicContext ctx(n, p);
      for (const auto& a : enumerate_partitions(n)) {
        const auto deg = oracle::degree(oracle::shape(a));
        CHECK(degree_valuation(a, p) == oracle::valuation(deg, int(p)));
        CHECK(is_p_singular(a, ctx) == (deg % p == 0));
      }
    }
}

TEST_CASE("four singularity methods agree") {
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 22; ++n) {
      const PAdicContext ctx(n, p);
      for_each_partition(n, [&](const Partition& a) {
        const bool b = is_p_singular(a, ctx, SingularityMethod::b_invariants);
        CHECK(is_p_singular(a, ctx, SingularityMethod::hooks) == b);
        CHECK(is_p_singular(a, ctx, SingularityMethod::degree) == b);
        CHECK(is_p_singular(a, ctx, SingularityMethod::character) == b);
      });
    }
}

TEST_CASE("weight away from d_m forces singularity") {
  for (Part p : {2, 3, 5})
    for (Part n = 0; n <= 20; ++n) {
      const PAdicContext ctx(n, p);
      for_each_partition(n, [&](const Partition& a) {
        for (std::size_t m = 0; m <= ctx.k() + 1; ++m)
          if (r_weight(a, ctx.power(m)) != ctx.d(m)) CHECK(is_p_singular(a, ctx));
      });
    }
}

TEST_CASE("four hook inequalities force singularity") {
  for (Part p : {2, 3, 5})
    for (Part n = 2; n <= 20; ++n) {
      const PAdicContext ctx(n, p);
      for (std::size_t t = 0; t <= ctx.k(); ++t) {
        const Part q = ctx.power(t), d = ctx.d(t);
        if (d < 1) continue;
        for_each_partition(n, [&](const Partition& a) {
          if (a.length() < 2 || a[0] <= a[1]) return;
          const Part a2 = a[1];
          if (hook_length(a, 1, a2) > d * q && hook_length(a, 1, a2 + 1) > (d - 1) * q &&
              hook_length(a, 1, a2 + 1) < d * q && hook_length(a, 2, 1) < q)
            CHECK(is_p_singular(a, ctx));
        });
      }
    }
}

TEST_CASE("hook-plus-column family is singular") {
  int checked = 0;
  for (Part p : {2, 3, 5})
    for (Part n = 2; n <= 30; ++n) {
      const PAdicContext ctx(n, p);
      for (std::size_t t = 1; t <= ctx.k(); ++t) {
        if (ctx.e(t) == 0 || ctx.d(t) == 0) continue;
        for (Part c = 1; c <= n; ++c) {
          if (!(ctx.e(t) <= n - c && n - c < ctx.power(t))) continue;
          std::vector<Part> parts{c};
          parts.insert(parts.end(), std::size_t(n - c), 1);
          const Partition a(parts);
          for (auto method : {SingularityMethod::hooks, SingularityMethod::b_invariants, SingularityMethod::degree})
            CHECK(is_p_singular(a, ctx, method));
          ++checked;
        }
      }
    }
  CHECK(checked > 50);
}

TEST_CASE("singular partition lists") {
  const auto s = p_singular_partitions(PAdicContext(4, 2));
  // degrees of S_4: 1, 3, 2, 3, 1
  CHECK(s == std::vector<Partition>{P({2, 2})});
  CHECK(p_singular_partitions(PAdicContext(3, 5)).empty());
}

}
