#include <doctest.h>

#include <paulimix/errors.hpp>
#include <paulimix/oracle.hpp>
#include <paulimix/qubit.hpp>
#include <paulimix/random.hpp>
#include <paulimix/solver.hpp>

#include <cmath>
#include <vector>

using namespace paulimix;

namespace {

constexpr double kPi = 3.14159265358979323846;

double reconstruction_error(const BlochVector& r, const WeightVector& w,
                            double distance) {
  const auto& b3 = StateSet::pauli_eigenstates();
  const double tn =
      trace_norm(bloch_to_matrix(r) - bloch_to_matrix(mixture(b3, w)));
  return std::abs(tn - distance);
}

void check_simplex(const WeightVector& w) {
  REQUIRE(w.size() == 6);
  double total = 0.0;
  for (double wi : w) {
    CHECK(wi >= 0.0);
    total += wi;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

BlochVector bloch_of(const UvParams& p) {
  return {2.0 * p.u, 2.0 * p.v, 1.0 - 2.0 * p.a};
}

}  // namespace

TEST_CASE("compute_uv examples") {
  const auto [u0, v0] = compute_uv({0.37, 0.0, 1.1});
  CHECK(u0 == 0.0);
  CHECK(v0 == 0.0);

  const auto [u1, v1] = compute_uv({0.5, 1.0, kPi / 4.0});
  CHECK(u1 == doctest::Approx(0.3535533905932738).epsilon(1e-15));
  CHECK(v1 == doctest::Approx(0.3535533905932738).epsilon(1e-15));

  const auto [u2, v2] = compute_uv({0.5, 1.0, kPi / 3.0});
  CHECK(u2 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(v2 == doctest::Approx(0.4330127018922193).epsilon(1e-15));

  // Third quadrant of phi: u flips sign, v stays negative too.
  const auto [u3, v3] = compute_uv({0.5, 1.0, kPi + 0.3});
  CHECK(u3 < 0.0);
  CHECK(v3 < 0.0);
}

TEST_CASE("compute_uv matches the Bloch components") {
  Rng rng(21);
  for (int i = 0; i < 5000; ++i) {
    const AkPhiParams p{rng.uniform(), rng.uniform(),
                        rng.uniform(0.0, 2.0 * kPi)};
    const auto [u, v] = compute_uv(p);
    const auto r = bloch_from_akphi(p);
    CHECK(std::abs(r.x - 2.0 * u) < 1e-16);
    CHECK(std::abs(r.y - 2.0 * v) < 1e-16);
    CHECK(std::abs(r.z - (1.0 - 2.0 * p.a)) < 1e-16);
  }
}

TEST_CASE("canonicalize examples") {
  {
    const auto [p, map] = canonicalize({0.1, 0.2, 0.3});
    CHECK(p.a == doctest::Approx(0.35).epsilon(1e-15));
    CHECK(p.u == 0.05);
    CHECK(p.v == 0.1);
    CHECK(map.sign_x == 1);
    CHECK(map.sign_y == 1);
    CHECK(map.sign_z == 1);
  }
  {
    const auto [p, map] = canonicalize({-0.3, 0.2, -0.5});
    CHECK(p.a == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.u == 0.15);
    CHECK(p.v == 0.1);
    CHECK(map.sign_x == -1);
    CHECK(map.sign_y == 1);
    CHECK(map.sign_z == -1);
  }
  {
    const auto [p, map] = canonicalize({0.0, 0.0, 0.0});
    CHECK(p.a == 0.5);
    CHECK(p.u == 0.0);
    CHECK(p.v == 0.0);
    CHECK(map.sign_x == 1);
    CHECK(map.sign_y == 1);
    CHECK(map.sign_z == 1);
  }
  CHECK_THROWS_AS(canonicalize({0.8, 0.6, 0.2}), InvalidInputError);
  CHECK_THROWS_AS(canonicalize({std::nan(""), 0.0, 0.0}), InvalidInputError);
}

TEST_CASE("canonicalize lands in the canonical octant and inverts") {
  Rng rng(22);
  for (int i = 0; i < 20000; ++i) {
    const auto r = rng.in_ball();
    const auto [p, map] = canonicalize(r);
    CHECK(p.a >= 0.0);
    CHECK(p.a <= 0.5);
    CHECK(p.u >= 0.0);
    CHECK(p.v >= 0.0);
    const auto back = map.apply(bloch_of(p));
    CHECK(std::abs(back.x - r.x) < 1e-15);
    CHECK(std::abs(back.y - r.y) < 1e-15);
    CHECK(std::abs(back.z - r.z) < 1e-15);
  }
}

TEST_CASE("region classification examples") {
  for (double a : {0.0, 0.1, 0.3, 0.5})
    CHECK(classify({a, 0.0, 0.0}) == Region::Exact);
  CHECK(classify({0.2, 0.282843, 0.282843}) == Region::CaseI);
  CHECK(classify({0.5, 0.353553, 0.353553}) == Region::CaseIV);
  CHECK(classify({0.1, 0.2996250781184899, 0.014993750781203498}) ==
        Region::CaseII);
  CHECK(classify({0.1, 0.014993750781203498, 0.2996250781184899}) ==
        Region::CaseIII);
}

TEST_CASE("region boundaries route to the closed side") {
  // Exact keeps its boundary a - u - v = 0 (all values dyadic).
  CHECK(classify({0.375, 0.125, 0.25}) == Region::Exact);
  // The band boundary u + v = (3 - 4a)/2 stays with the inner cases.
  CHECK(classify({0.4375, 0.3125, 0.3125}) == Region::CaseI);
  CHECK(classify({0.4375, 0.3125, 0.3125 + 1e-9}) == Region::CaseIV);
}

TEST_CASE("region classification is a partition") {
  Rng rng(23);
  for (int i = 0; i < 300000; ++i) {
    const UvParams p = canonicalize(rng.in_ball()).first;
    const Region region = classify(p);
    const bool exact = p.a - p.u - p.v >= 0.0;
    const bool beyond_band = p.u + p.v > (3.0 - 4.0 * p.a) / 2.0;
    const bool north = p.a - p.u + 2.0 * p.v < 0.0;
    const bool east = p.a - p.v + 2.0 * p.u < 0.0;
    switch (region) {
      case Region::Exact:
        CHECK(exact);
        break;
      case Region::CaseIV:
        CHECK(!exact);
        CHECK(beyond_band);
        break;
      case Region::CaseII:
        CHECK(!exact);
        CHECK(!beyond_band);
        CHECK(north);
        break;
      case Region::CaseIII:
        CHECK(!exact);
        CHECK(!beyond_band);
        CHECK(!north);
        CHECK(east);
        break;
      case Region::CaseI:
        CHECK(!exact);
        CHECK(!beyond_band);
        CHECK(!north);
        CHECK(!east);
        break;
    }
  }
}

TEST_CASE("region names") {
  CHECK(to_string(Region::Exact) == "Exact");
  CHECK(to_string(Region::CaseI) == "CaseI");
  CHECK(to_string(Region::CaseIV) == "CaseIV");
}

TEST_CASE("exact decomposition family examples") {
  {
    const auto w = solve_exact_family({0.3, 0.0, 0.0}, {});
    REQUIRE(w.size() == 6);
    CHECK(std::abs(w[0] - 0.7) < 1e-15);
    CHECK(std::abs(w[1] - 0.3) < 1e-15);
    for (int i = 2; i < 6; ++i) CHECK(w[i] == 0.0);
  }
  {
    const auto w = solve_exact_family({0.3, 0.05, 0.1}, {});
    const WeightVector want = {0.55, 0.15, 0.1, 0.0, 0.2, 0.0};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(w[i] - want[i]) < 1e-15);
    const auto m = mixture(StateSet::pauli_eigenstates(), w);
    CHECK(std::abs(m.x - 0.1) < 1e-15);
    CHECK(std::abs(m.y - 0.2) < 1e-15);
    CHECK(std::abs(m.z - 0.4) < 1e-15);
  }
  {
    const auto w = solve_exact_family({0.3, 0.05, 0.1}, {0.15, 0.0});
    const WeightVector want = {0.4, 0.0, 0.25, 0.15, 0.2, 0.0};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(w[i] - want[i]) < 1e-15);
  }
}

TEST_CASE("exact decomposition family validates its input") {
  CHECK_THROWS_AS(solve_exact_family({0.2, 0.15, 0.1}, {}), InvalidInputError);
  CHECK_THROWS_AS(solve_exact_family({0.3, 0.0, 0.0}, {-1e-6, 0.0}),
                  InvalidInputError);
  CHECK_THROWS_AS(solve_exact_family({0.3, 0.0, 0.0}, {0.2, 0.2}),
                  InvalidInputError);
  // Tiny negative t is clamped rather than rejected.
  const auto w = solve_exact_family({0.3, 0.0, 0.0}, {-5e-13, 0.0});
  CHECK(w[3] == 0.0);
}

TEST_CASE("exact decomposition family reproduces the state") {
  Rng rng(24);
  for (int i = 0; i < 5000; ++i) {
    const double a = rng.uniform(0.0, 0.5);
    const double u = rng.uniform() * a;
    const double v = rng.uniform() * (a - u);
    const double slack = a - u - v;
    const double t1 = rng.uniform() * slack;
    const double t2 = rng.uniform() * (slack - t1);
    const auto w = solve_exact_family({a, u, v}, {t1, t2});
    check_simplex(w);
    const auto m = mixture(StateSet::pauli_eigenstates(), w);
    const auto r = bloch_of({a, u, v});
    CHECK(std::abs(m.x - r.x) < 1e-15);
    CHECK(std::abs(m.y - r.y) < 1e-15);
    CHECK(std::abs(m.z - r.z) < 1e-15);
  }
}

TEST_CASE("solve on an exactly decomposable state") {
  const auto sol = solve(AkPhiParams{0.3, 0.0, 0.7});
  CHECK(sol.distance == 0.0);
  REQUIRE(sol.region.has_value());
  CHECK(*sol.region == Region::Exact);
  CHECK(sol.valid);
  CHECK(std::abs(sol.weights[0] - 0.7) < 1e-15);
  CHECK(std::abs(sol.weights[1] - 0.3) < 1e-15);
}

TEST_CASE("solve on the equator with maximal coherence") {
  const auto sol = solve(AkPhiParams{0.5, 1.0, kPi / 3.0});
  CHECK(std::abs(sol.distance - 0.25881904510252074) < 1e-12);
  REQUIRE(sol.region.has_value());
  CHECK(*sol.region == Region::CaseIV);
  CHECK(std::abs(sol.weights[2] - 0.3169872981077807) < 1e-12);
  CHECK(std::abs(sol.weights[4] - 0.6830127018922193) < 1e-12);
  CHECK(sol.weights[0] == 0.0);
  CHECK(sol.weights[1] == 0.0);
  CHECK(sol.weights[3] == 0.0);
  CHECK(sol.weights[5] == 0.0);
}

TEST_CASE("solve in the three-state region") {
  const auto sol = solve(AkPhiParams{0.2, 1.0, kPi / 4.0});
  CHECK(std::abs(sol.distance - 0.42225715706633066) < 1e-12);
  REQUIRE(sol.region.has_value());
  CHECK(*sol.region == Region::CaseI);
  CHECK(std::abs(sol.weights[0] - 0.356209716700508) < 1e-12);
  CHECK(std::abs(sol.weights[2] - 0.32189514164974603) < 1e-12);
  CHECK(std::abs(sol.weights[4] - 0.32189514164974603) < 1e-12);
}

TEST_CASE("solve in the two-state edge regions") {
  const auto sol = solve(AkPhiParams{0.1, 1.0, 0.05});
  CHECK(std::abs(sol.distance - 0.28390067607806385) < 1e-12);
  REQUIRE(sol.region.has_value());
  CHECK(*sol.region == Region::CaseII);
  CHECK(std::abs(sol.weights[0] - 0.6003749218815102) < 1e-12);
  CHECK(std::abs(sol.weights[2] - 0.3996250781184899) < 1e-12);

  const auto mirror = solve(AkPhiParams{0.1, 1.0, kPi / 2.0 - 0.05});
  CHECK(std::abs(mirror.distance - 0.28390067607806385) < 1e-12);
  REQUIRE(mirror.region.has_value());
  CHECK(*mirror.region == Region::CaseIII);
  CHECK(std::abs(mirror.weights[0] - 0.6003749218815102) < 1e-12);
  CHECK(std::abs(mirror.weights[4] - 0.3996250781184899) < 1e-12);
}

TEST_CASE("solve de-canonicalizes the weights") {
  const auto south = solve(BlochVector{0.0, 0.0, -1.0});
  CHECK(south.distance == 0.0);
  CHECK(south.weights[1] == 1.0);

  const auto sol = solve(BlochVector{-0.5, -0.8660254037844386, 0.0});
  CHECK(std::abs(sol.distance - 0.25881904510252074) < 1e-12);
  CHECK(std::abs(sol.weights[3] - 0.3169872981077807) < 1e-12);
  CHECK(std::abs(sol.weights[5] - 0.6830127018922193) < 1e-12);
}

TEST_CASE("both solve overloads agree") {
  for (const AkPhiParams p :
       {AkPhiParams{0.2, 1.0, kPi / 4.0}, AkPhiParams{0.45, 0.8, 2.0},
        AkPhiParams{0.7, 0.6, 5.5}}) {
    const auto lhs = solve(p);
    const auto rhs = solve(bloch_from_akphi(p));
    CHECK(lhs.distance == rhs.distance);
    CHECK(lhs.region == rhs.region);
    for (int i = 0; i < 6; ++i) CHECK(lhs.weights[i] == rhs.weights[i]);
  }
}

TEST_CASE("solve rejects unphysical input") {
  CHECK_THROWS_AS(solve(BlochVector{1.1, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(solve(BlochVector{0.0, std::nan(""), 0.0}),
                  InvalidInputError);
}

TEST_CASE("solve reconstructs the state at the reported distance") {
  Rng rng(25);
  for (int i = 0; i < 10000; ++i) {
    const auto r = rng.in_ball();
    const auto sol = solve(r);
    CHECK(sol.valid);
    check_simplex(sol.weights);
    CHECK(reconstruction_error(r, sol.weights, sol.distance) < 1e-12);
  }
}

TEST_CASE("solve agrees with the projection oracle") {
  Rng rng(26);
  for (int i = 0; i < 10000; ++i) {
    const auto r = rng.in_ball();
    CHECK(std::abs(solve(r).distance - project_cross_polytope(r).distance) <
          1e-12);
  }
}

TEST_CASE("distance grows monotonically with coherence") {
  for (double a : {0.05, 0.15, 0.25, 0.35, 0.45, 0.5}) {
    for (double phi : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
      double prev = 0.0;
      for (int i = 0; i <= 40; ++i) {
        const double k = i / 40.0;
        const double d = solve(AkPhiParams{a, k, phi}).distance;
        CHECK(d >= prev - 1e-14);
        prev = d;
      }
    }
  }
}

TEST_CASE("solve commutes with the octahedral symmetries") {
  const auto& syms = octahedral_symmetries();
  Rng rng(27);
  for (int i = 0; i < 200; ++i) {
    const auto r = rng.in_ball();
    const auto sol = solve(r);
    for (const auto& sym : syms) {
      const auto sol2 = solve(sym.apply(r));
      CHECK(std::abs(sol2.distance - sol.distance) < 1e-12);
      // Axis permutations shuffle the boundary-case labels among each other;
      // only the Exact region is preserved as a set.
      CHECK((sol2.region == Region::Exact) == (sol.region == Region::Exact));
      if (sol.region != Region::Exact) {
        const auto expected = sym.apply_weights(sol.weights);
        for (int j = 0; j < 6; ++j)
          CHECK(std::abs(sol2.weights[j] - expected[j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("coherence threshold examples") {
  CHECK(sacchi_threshold(0.5, kPi / 4.0) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(sacchi_threshold(0.5, kPi / 3.0) ==
        doctest::Approx(0.7320508075688772).epsilon(1e-12));
  CHECK(sacchi_threshold(0.2, kPi / 4.0) ==
        doctest::Approx(0.3535533905932738).epsilon(1e-12));
}

TEST_CASE("coherence threshold marks u + v = a") {
  for (double a : {0.1, 0.25, 0.4, 0.5}) {
    for (double phi : {0.2, kPi / 4.0, 1.0, 1.4}) {
      const double kth = sacchi_threshold(a, phi);
      REQUIRE(kth <= 1.0);
      const auto [u, v] = compute_uv({a, kth, phi});
      CHECK(std::abs(u + v - a) < 1e-12);
    }
  }
}

TEST_CASE("coherence threshold rejects degenerate parameters") {
  CHECK_THROWS_AS(sacchi_threshold(0.0, 0.5), InvalidInputError);
  CHECK_THROWS_AS(sacchi_threshold(1.0, 0.5), InvalidInputError);
  CHECK_THROWS_AS(sacchi_threshold(0.3, kPi), InvalidInputError);
  CHECK_THROWS_AS(sacchi_threshold(0.3, 2.5), InvalidInputError);
}

TEST_CASE("reference solution goes negative on the equator") {
  const auto sol = sacchi_reference(AkPhiParams{0.5, 1.0, kPi / 4.0});
  CHECK(!sol.valid);
  CHECK(!sol.region.has_value());
  CHECK(std::abs(sol.weights[0] - (1.0 - std::sqrt(2.0)) / 3.0) < 1e-12);
  CHECK(std::abs(sol.distance - 0.23914631173810022) < 1e-12);
  // The corrected distance is strictly larger.
  CHECK(solve(AkPhiParams{0.5, 1.0, kPi / 4.0}).distance - sol.distance >
        1e-3);

  const auto sol3 = sacchi_reference(AkPhiParams{0.5, 1.0, kPi / 3.0});
  CHECK(!sol3.valid);
  CHECK(std::abs(sol3.distance - 0.21132486540518713) < 1e-12);
  CHECK(std::abs(sol3.weights[0] + 0.1220084679281462) < 1e-12);
  CHECK(solve(AkPhiParams{0.5, 1.0, kPi / 3.0}).distance - sol3.distance >
        1e-3);
}

TEST_CASE("reference solution matches solve where it stays feasible") {
  // k sits inside the window (k_th = 0.353553 < 0.45 <= 0.5) and all
  // weights stay positive, so the plane formula is the true optimum.
  const AkPhiParams p{0.2, 0.45, kPi / 4.0};
  const auto ref = sacchi_reference(p);
  const auto sol = solve(p);
  CHECK(ref.valid);
  REQUIRE(sol.region == Region::CaseI);
  CHECK(std::abs(ref.distance - 0.06299866145813104) < 1e-12);
  CHECK(std::abs(ref.distance - sol.distance) < 1e-15);
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs(ref.weights[i] - sol.weights[i]) < 1e-15);
}

TEST_CASE("reference solution window boundaries") {
  const double kth = sacchi_threshold(0.2, kPi / 4.0);
  CHECK_THROWS_AS(sacchi_reference(AkPhiParams{0.2, kth - 1e-6, kPi / 4.0}),
                  OutOfWindowError);
  CHECK_NOTHROW(sacchi_reference(AkPhiParams{0.2, kth + 1e-6, kPi / 4.0}));
  // Upper edge a / sqrt(a(1-a)) = 0.5 at a = 0.2.
  CHECK_THROWS_AS(sacchi_reference(AkPhiParams{0.2, 0.6, kPi / 4.0}),
                  OutOfWindowError);
  CHECK_NOTHROW(sacchi_reference(AkPhiParams{0.2, 0.499, kPi / 4.0}));
  CHECK_THROWS_AS(sacchi_reference(AkPhiParams{0.2, 0.3, kPi / 4.0}),
                  OutOfWindowError);
}

TEST_CASE("reference solution requires the canonical octant") {
  CHECK_THROWS_AS(sacchi_reference(AkPhiParams{0.7, 0.9, kPi / 4.0}),
                  InvalidInputError);
  CHECK_THROWS_AS(sacchi_reference(AkPhiParams{0.3, 0.9, 2.0}),
                  InvalidInputError);
}

TEST_CASE("reference solution lower-bounds the corrected distance") {
  Rng rng(28);
  int invalid_seen = 0;
  for (int i = 0; i < 20000; ++i) {
    const double a = rng.uniform(0.05, 0.5);
    const double phi = rng.uniform(0.05, kPi / 2.0 - 0.05);
    const double kth = sacchi_threshold(a, phi);
    const double kup = std::min(1.0, a / std::sqrt(a * (1.0 - a)));
    if (kth >= kup) continue;
    const double k = rng.uniform(kth, kup);
    Solution ref;
    try {
      ref = sacchi_reference(AkPhiParams{a, k, phi});
    } catch (const OutOfWindowError&) {
      continue;  // k landed within float noise of an edge
    }
    const auto sol = solve(AkPhiParams{a, k, phi});
    CHECK(ref.distance <= sol.distance + 1e-12);
    if (!ref.valid) {
      ++invalid_seen;
      double min_w = ref.weights[0];
      for (double w : ref.weights) min_w = std::min(min_w, w);
      CHECK(min_w < 0.0);
      if (min_w < -1e-3) CHECK(sol.distance - ref.distance > 1e-8);
    }
  }
  CHECK(invalid_seen > 100);
}

TEST_CASE("reference solution projects onto the three-state plane") {
  // Even with a negative weight the affine combination reproduces the state
  // at the reported distance.
  const auto& b3 = StateSet::pauli_eigenstates();
  for (const AkPhiParams p : {AkPhiParams{0.5, 1.0, kPi / 4.0},
                              AkPhiParams{0.5, 1.0, kPi / 3.0},
                              AkPhiParams{0.3, 0.6, 0.9}}) {
    const auto ref = sacchi_reference(p);
    BlochVector m{};
    for (int i = 0; i < 6; ++i) m = m + b3.states[i] * ref.weights[i];
    const double tn =
        trace_norm(bloch_to_matrix(bloch_from_akphi(p)) - bloch_to_matrix(m));
    CHECK(std::abs(tn - ref.distance) < 1e-12);
  }
}
