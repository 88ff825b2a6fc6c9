// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "ternlab/vector_ternary.hpp"

using namespace ternlab;

namespace {

Ket make_ket(std::initializer_list<Cx> entries) {
  CVec v(static_cast<int>(entries.size()));
  int n = 0;
  for (const Cx& z : entries) v(n++) = z;
  return Ket(std::move(v));
}

}  // namespace

TEST_CASE("triple product on basis states") {
  const Ket up = Ket::basis(2, 0), down = Ket::basis(2, 1);
  // [up, down, down] = up <down|down> = up, exactly.
  CHECK(distance(tern_vec(up, down, down), up) == 0.0);
  // [up, up, down] = up <up|down> = 0.
  CHECK(norm(tern_vec(up, up, down)) == 0.0);
}

TEST_CASE("triple product in dimension one is z1 conj(z2) z3") {
  const Ket a = make_ket({Cx(2, 0)});
  const Ket b = make_ket({Cx(0, 1)});
  const Ket c = make_ket({Cx(1, 0)});
  // 2 * conj(i) * 1 = -2i.
  CHECK(tern_vec(a, b, c)(0) == Cx(0, -2));
}

TEST_CASE("dual-side product scales its third slot") {
  const Bra up = adjoint(Ket::basis(2, 0));
  const Bra down = adjoint(Ket::basis(2, 1));
  CHECK(norm(tern_dual(up, down, up)) == 0.0);
  CHECK(distance(tern_dual(up, up, down), down) == 0.0);
}

TEST_CASE("norm identity ||[a,b,c]|| = |<b|c>| ||a||") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const Ket a = random_ket(6, rng), b = random_ket(6, rng),
              c = random_ket(6, rng);
    const double lhs = norm(tern_vec(a, b, c));
    const double rhs = std::abs(inner(b, c)) * norm(a);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("law registry round trips names") {
  for (const std::string& name : vec_law_names()) {
    const auto law = vec_law_from_name(name);
    REQUIRE(law.has_value());
    CHECK(vec_law_name(*law) == name);
  }
  CHECK_FALSE(vec_law_from_name("no-such-law").has_value());
}

TEST_CASE("positive vector laws hold") {
  const TolerancePolicy tol{};
  for (VecLaw law : {VecLaw::ParaAssoc, VecLaw::Projection, VecLaw::Linearity1,
                     VecLaw::Linearity2Conj, VecLaw::Linearity3,
                     VecLaw::ZeroAbsorb, VecLaw::NormBound,
                     VecLaw::DualCompat}) {
    for (int dim : {1, 2, 4}) {
      const CheckReport rep = check_law(law, dim, 60, 17, tol);
      INFO(vec_law_name(law), " dim ", dim);
      CHECK(rep.pass);
      CHECK_FALSE(rep.counterexample.has_value());
    }
  }
  CHECK(check_law(VecLaw::DsumSplit, 5, 60, 17, tol).pass);
  CHECK(check_law(VecLaw::TensorSplit, 3, 60, 17, tol).pass);
}

TEST_CASE("repeated-argument laws fail generically and the right one "
          "recovers under normalization") {
  const TolerancePolicy tol{};
  const CheckReport right = check_law(VecLaw::MalcevRight, 3, 80, 23, tol);
  CHECK_FALSE(right.pass);
  REQUIRE(right.detail.has_value());
  CHECK((*right.detail)["min_violation_ratio"].get<double>() > 10.0);
  REQUIRE(right.counterexample.has_value());
  // The counterexample replays: the recorded inputs really do violate.
  {
    const Env& env = *right.counterexample;
    const Ket &a = env.kets.at("a"), &b = env.kets.at("b");
    const double res = distance(tern_vec(a, b, b), a);
    const double scale = std::max(norm(tern_vec(a, b, b)), norm(a));
    CHECK(tol.clearly_violates(res, scale));
  }

  const CheckReport left = check_law(VecLaw::MalcevLeft, 3, 80, 23, tol);
  CHECK_FALSE(left.pass);

  CHECK(check_law(VecLaw::MalcevRight, 3, 80, 23, tol, true).pass);
  // Unit middle argument still only projects; the left law keeps failing.
  CHECK_FALSE(check_law(VecLaw::MalcevLeft, 3, 80, 23, tol, true).pass);
}

TEST_CASE("componentwise and factorwise products match their canonical "
          "routes") {
  Rng rng(29);
  const Ket x1 = random_ket(2, rng), x2 = random_ket(2, rng),
            x3 = random_ket(2, rng);
  const Ket y1 = random_ket(3, rng), y2 = random_ket(3, rng),
            y3 = random_ket(3, rng);
  const Ket ds = tern_vec_dsum({x1, y1}, {x2, y2}, {x3, y3});
  CHECK(ds.dim() == 5);
  CHECK(distance(block(ds, 0, 2), tern_vec(x1, x2, x3)) == 0.0);
  CHECK(distance(block(ds, 2, 3), tern_vec(y1, y2, y3)) == 0.0);

  const Ket tp = tern_vec_tensor({x1, y1}, {x2, y2}, {x3, y3});
  CHECK(tp.dim() == 6);
  CHECK(distance(tp, tern_vec(tensor(x1, y1), tensor(x2, y2),
                              tensor(x3, y3))) < 1e-12);
}

TEST_CASE("dsum-split needs dim >= 2") {
  try {
    check_law(VecLaw::DsumSplit, 1, 10, 1, TolerancePolicy{});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "bad-dim");
  }
}
