#include <doctest.h>

#include <cmath>
#include <random>

#include "duffing/model.hpp"

using namespace duffing;

namespace {

ModelSpec sample_model(ModelKind kind) {
  switch (kind) {
    case ModelKind::DuffingClassic: return {.kind = kind, .delta = 0.3, .alpha = -1.0, .beta = 1.0, .gamma = 0.5, .omega = 1.2};
    case ModelKind::DuffingHomotopy:
      return {.kind = kind, .delta = 0.3, .alpha = 0.5, .beta = 0.02, .gamma = -0.04, .omega = 0.7, .lambda_h = 0.4};
    case ModelKind::DuffingChaos: return {.kind = kind, .delta = 0.05, .gamma = 0.2, .omega = 1.1};
    case ModelKind::DuffingQuintic: return {.kind = kind, .delta = 0.05, .beta = 0.3, .gamma = 0.0025, .omega = 0.004};
    case ModelKind::Ecology:
      return {.kind = kind, .alpha = -0.0000056, .beta = 2.00056, .omega = 0.001, .coupling_a = -0.095};
    case ModelKind::LinearTest: return {.kind = kind, .delta = 0.1, .alpha = 1.0};
  }
  return {};
}

constexpr ModelKind kAllKinds[] = {ModelKind::DuffingClassic, ModelKind::DuffingHomotopy, ModelKind::DuffingChaos,
                                   ModelKind::DuffingQuintic, ModelKind::Ecology,         ModelKind::LinearTest};

}  // namespace

TEST_CASE("rhs at the origin keeps only the forcing") {
  const ModelSpec chaos{.kind = ModelKind::DuffingChaos, .delta = 0.05, .gamma = 0.2, .omega = 1.1};
  const Rate r = rhs(chaos, {0, 0, 0});
  CHECK(r.dq == 0.0);
  CHECK(r.dp == 0.2);

  const ModelSpec eco{.kind = ModelKind::Ecology, .alpha = -0.0000056, .beta = 2.00056, .coupling_a = -0.095};
  const Rate e = rhs(eco, {0, 0, 0});
  CHECK(e.dq == -1.0);
  CHECK(e.dp == -2.00056);
}

TEST_CASE("homotopy model at lambda 0 is free motion") {
  ModelSpec m = sample_model(ModelKind::DuffingHomotopy);
  m.lambda_h = 0.0;
  const Rate r = rhs(m, {0.7, -1.3, 4.0});
  CHECK(r.dq == -1.3);
  CHECK(r.dp == 0.0);
}

TEST_CASE("homotopy model at lambda 1 equals the classic model") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  ModelSpec hom = sample_model(ModelKind::DuffingHomotopy);
  hom.lambda_h = 1.0;
  ModelSpec classic = hom;
  classic.kind = ModelKind::DuffingClassic;
  for (int i = 0; i < 200; ++i) {
    const State s{u(rng), u(rng), 10.0 * u(rng)};
    const Rate a = rhs(hom, s), b = rhs(classic, s);
    CHECK(a.dq == b.dq);
    CHECK(a.dp == b.dp);
  }
}

TEST_CASE("jacobian examples") {
  const ModelSpec chaos{.kind = ModelKind::DuffingChaos, .delta = 0.05, .gamma = 0.2, .omega = 1.1};
  const Jacobian jc = jacobian(chaos, {0, 0.4, 2});
  CHECK(jc[1][0] == 1.0);
  CHECK(jc[1][1] == -0.05);

  const ModelSpec lin{.kind = ModelKind::LinearTest, .delta = 0.1, .alpha = 1.0};
  for (const State s : {State{0, 0, 0}, State{5, -2, 7}}) {
    const Jacobian j = jacobian(lin, s);
    CHECK(j[0][0] == 0.0);
    CHECK(j[0][1] == 1.0);
    CHECK(j[1][0] == -1.0);
    CHECK(j[1][1] == -0.1);
  }

  const ModelSpec quintic{.kind = ModelKind::DuffingQuintic, .delta = 0.05, .beta = 0.3, .gamma = 0.0025, .omega = 0.004};
  const Jacobian jq = jacobian(quintic, {1.0, 0.0, 0.0});
  CHECK(jq[1][0] == doctest::Approx(1.8875).epsilon(1e-15));
  // Central difference cross-check of the same entry.
  const double eps = 1e-6;
  const double fd = (rhs(quintic, {1.0 + eps, 0, 0}).dp - rhs(quintic, {1.0 - eps, 0, 0}).dp) / (2 * eps);
  CHECK(fd == doctest::Approx(1.8875).epsilon(1e-8));
}

TEST_CASE("jacobian matches central finite differences for every kind") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (ModelKind kind : kAllKinds) {
    const ModelSpec m = sample_model(kind);
    for (int i = 0; i < 100; ++i) {
      const State s{u(rng), u(rng), 5.0 * u(rng)};
      const Jacobian j = jacobian(m, s);
      const double hq = 1e-6 * std::max(1.0, std::abs(s.q));
      const double hp = 1e-6 * std::max(1.0, std::abs(s.p));
      const Rate qp = rhs(m, {s.q + hq, s.p, s.t}), qm = rhs(m, {s.q - hq, s.p, s.t});
      const Rate pp = rhs(m, {s.q, s.p + hp, s.t}), pm = rhs(m, {s.q, s.p - hp, s.t});
      const double fd[2][2] = {{(qp.dq - qm.dq) / (2 * hq), (pp.dq - pm.dq) / (2 * hp)},
                               {(qp.dp - qm.dp) / (2 * hq), (pp.dp - pm.dp) / (2 * hp)}};
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          INFO("kind ", to_string(kind), " entry ", r, c);
          CHECK(std::abs(j[r][c] - fd[r][c]) <= 1e-6 * std::max(1.0, std::abs(j[r][c])));
        }
    }
  }
}

TEST_CASE("duffing-family jacobian trace is -delta") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (ModelKind kind : {ModelKind::DuffingClassic, ModelKind::DuffingChaos, ModelKind::DuffingQuintic}) {
    const ModelSpec m = sample_model(kind);
    for (int i = 0; i < 50; ++i) {
      const Jacobian j = jacobian(m, {u(rng), u(rng), u(rng)});
      CHECK(j[0][0] + j[1][1] == -m.delta);
    }
  }
}

TEST_CASE("conserved offset") {
  CHECK(conserved_offset({.kind = ModelKind::Ecology, .beta = 2.00056}, {0, 0, 0}) == 0.0);
  CHECK(conserved_offset({.kind = ModelKind::Ecology, .beta = 0.001}, {0.08, 0.07, 0}) ==
        doctest::Approx(0.06992).epsilon(1e-15));
  CHECK(conserved_offset({.kind = ModelKind::Ecology, .beta = 0.1}, {0.8, 0.9, 0}) ==
        doctest::Approx(0.82).epsilon(1e-15));
  CHECK_THROWS_AS(conserved_offset(sample_model(ModelKind::DuffingChaos), {0, 0, 0}), UsageError);
}

TEST_CASE("validation and overflow") {
  ModelSpec hom = sample_model(ModelKind::DuffingHomotopy);
  hom.lambda_h = 1.5;
  CHECK_THROWS_AS(rhs(hom, {0, 0, 0}), UsageError);

  ModelSpec chaos = sample_model(ModelKind::DuffingChaos);
  chaos.gamma = std::nan("");
  CHECK_THROWS_AS(rhs(chaos, {0, 0, 0}), UsageError);

  // Unread fields are ignored, even when non-finite.
  ModelSpec lin = sample_model(ModelKind::LinearTest);
  lin.gamma = std::nan("");
  CHECK_NOTHROW(rhs(lin, {1, 0, 0}));

  const State huge{1e200, 0, 0};
  try {
    rhs(sample_model(ModelKind::DuffingChaos), huge);
    FAIL("expected overflow");
  } catch (const NumericalOverflow& e) {
    CHECK(e.state().q == 1e200);
  }
}

TEST_CASE("model kind names round-trip") {
  for (ModelKind kind : kAllKinds) CHECK(model_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(model_kind_from_string("VAN_DER_POL"), UsageError);
}
